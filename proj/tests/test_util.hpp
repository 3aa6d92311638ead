// Copyright (c) the holodyn developers
// SPDX-License-Identifier: Apache-2.0

#ifndef HOLODYN_TESTS_TEST_UTIL_HPP_
#define HOLODYN_TESTS_TEST_UTIL_HPP_

#include <cmath>
#include <optional>

#include "holodyn/errors.hpp"

namespace holodyn::test {

/// Runs f and reports the ErrorCode it threw (nullopt when it didn't throw).
template <typename F>
std::optional<ErrorCode> thrown_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline bool close_rel(double a, double b, double tol = 1e-12) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

}  // namespace holodyn::test

#endif  // HOLODYN_TESTS_TEST_UTIL_HPP_
