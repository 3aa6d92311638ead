// Copyright (c) the holodyn developers
// SPDX-License-Identifier: Apache-2.0

#ifndef HOLODYN_MULTI_INDEX_HPP_
#define HOLODYN_MULTI_INDEX_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace holodyn {

/// Finitely supported exponent vector over variables indexed 1, 2, 3, ...
///
/// Stored as (variable, exponent) pairs sorted by variable index; exponents
/// are strictly positive (absence encodes zero). The total order is graded
/// lexicographic: degree first, then lexicographic on the pair sequence.
/// This order fixes the serialization order of every term table.
class MultiIndex {
 public:
  using Entry = std::pair<int, int>;  // (variable index >= 1, exponent >= 1)

  MultiIndex() = default;

  /// e_j, the unit index for variable j.
  static MultiIndex unit(int variable);

  /// Builds from arbitrary (variable, exponent) pairs; merges duplicates,
  /// drops zero exponents. Throws InvalidArgument on variable < 1 or
  /// exponent < 0.
  static MultiIndex from_pairs(const std::vector<Entry>& pairs);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  /// Sum of exponents.
  int degree() const noexcept;

  /// Largest variable index in the support (0 for the empty index).
  int max_variable() const noexcept;

  /// Exponent of a variable (0 if absent).
  int exponent(int variable) const noexcept;

  std::vector<int> support() const;

  /// Componentwise sum.
  MultiIndex plus(const MultiIndex& other) const;

  /// Componentwise difference, or nullopt if any component would go negative.
  std::optional<MultiIndex> minus(const MultiIndex& other) const;

  /// True when other <= this componentwise (other divides this as a monomial).
  bool contains(const MultiIndex& other) const noexcept;

  /// Copy with one variable's exponent shifted by delta (result must stay
  /// non-negative; a zero exponent removes the entry).
  MultiIndex with_increment(int variable, int delta) const;

  /// Rendering like "z1^2*z3" ("1" for the empty index).
  std::string to_string() const;

  bool operator==(const MultiIndex& other) const = default;
  std::strong_ordering operator<=>(const MultiIndex& other) const noexcept;

 private:
  std::vector<Entry> entries_;
};

}  // namespace holodyn

#endif  // HOLODYN_MULTI_INDEX_HPP_
