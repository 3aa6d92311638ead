// Copyright (c) the holodyn developers
// SPDX-License-Identifier: Apache-2.0

#ifndef HOLODYN_ERRORS_HPP_
#define HOLODYN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace holodyn {

enum class ErrorCode {
  InvalidArgument,
  TailUnavailable,
  BlockTooLarge,
  DimensionTooSmall,
  TrivialOperator,
  NotFound,
  AssociatedMismatch,
  EqualScalars,
  ScaleOutOfRange,
  DependentGenerators,
  ConfigError,
  IoError,
};

const char* to_string(ErrorCode code);

/// Library-wide exception carrying a machine-readable code alongside the
/// human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace holodyn

#endif  // HOLODYN_ERRORS_HPP_
