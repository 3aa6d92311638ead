// Copyright (c) the holodyn developers
// SPDX-License-Identifier: Apache-2.0

#include "holodyn/cylinder.hpp"

#include <algorithm>
#include <string>

#include "holodyn/errors.hpp"

namespace holodyn {

CylinderIndex::CylinderIndex(int n_) : n(n_) {
  if (n_ < 1) {
    throw Error(ErrorCode::InvalidArgument, "cylinder index must be >= 1");
  }
}

int essential_dimension(const Series& f) { return f.essential_dimension(); }

Series embed(const Series& f, CylinderIndex n) {
  int d = f.essential_dimension();
  if (d > n.n) {
    throw Error(ErrorCode::DimensionTooSmall,
                "function involves z" + std::to_string(d) +
                    " but the asserted cylinder is " + std::to_string(n.n));
  }
  return f;
}

Series restrict_to(const Series& f, CylinderIndex n) {
  Series::TermMap kept;
  for (const auto& [alpha, c] : f.terms()) {
    if (alpha.max_variable() <= n.n) kept.emplace(alpha, c);
  }

  std::optional<TailDescriptor> tail;
  if (f.tail()) {
    if (const auto* e = std::get_if<ExponentialTail>(&*f.tail())) {
      ExponentialTail t = *e;
      if (static_cast<int>(t.lambda.size()) > n.n) t.lambda.resize(n.n);
      tail = t;
    } else {
      GapTail t = std::get<GapTail>(*f.tail());
      if (t.variable > n.n) t.scale = 0.0;
      tail = t;
    }
  }
  return Series::from_terms(std::move(kept), f.truncation_degree(), std::move(tail));
}

Complex coefficient_functional(const Series& f, const MultiIndex& alpha) {
  return f.coefficient(alpha);
}

}  // namespace holodyn
