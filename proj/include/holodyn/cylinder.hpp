// Copyright (c) the holodyn developers
// SPDX-License-Identifier: Apache-2.0

#ifndef HOLODYN_CYLINDER_HPP_
#define HOLODYN_CYLINDER_HPP_

#include "holodyn/series.hpp"

namespace holodyn {

/// Number of retained variables n >= 1 for the cylinder calculus: the n-th
/// cylinder is the subspace of functions depending only on z_1..z_n.
struct CylinderIndex {
  int n;

  explicit CylinderIndex(int n_);
};

/// Least n such that f lies in the n-th cylinder (0 for constants).
int essential_dimension(const Series& f);

/// Views a function of the first n variables as a function of all variables.
/// One shared data model serves every cylinder, so this is the identity on
/// the coefficient table; it validates the asserted cylinder and is the hook
/// downstream certificates use to record n. Throws DimensionTooSmall when f
/// genuinely involves a variable beyond n.
Series embed(const Series& f, CylinderIndex n);

/// Substitutes z_{n+1} = z_{n+2} = ... = 0: drops every term whose support
/// reaches past variable n. Tail descriptors restrict alongside (exponential
/// directions truncate; a gap tail on a dropped variable collapses to 0).
Series restrict_to(const Series& f, CylinderIndex n);

/// The continuous linear functional f -> a_alpha. Exact, and the separation
/// witness behind the non-density certificates: it vanishes on a whole
/// cylinder whenever alpha reaches past it.
Complex coefficient_functional(const Series& f, const MultiIndex& alpha);

}  // namespace holodyn

#endif  // HOLODYN_CYLINDER_HPP_
