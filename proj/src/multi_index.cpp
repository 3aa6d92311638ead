// Copyright (c) the holodyn developers
// SPDX-License-Identifier: Apache-2.0

#include "holodyn/multi_index.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "holodyn/errors.hpp"

namespace holodyn {

MultiIndex MultiIndex::unit(int variable) {
  if (variable < 1) {
    throw Error(ErrorCode::InvalidArgument, "variable index must be >= 1");
  }
  MultiIndex m;
  m.entries_.emplace_back(variable, 1);
  return m;
}

MultiIndex MultiIndex::from_pairs(const std::vector<Entry>& pairs) {
  std::map<int, int> merged;
  for (const auto& [var, exp] : pairs) {
    if (var < 1) {
      throw Error(ErrorCode::InvalidArgument, "variable index must be >= 1");
    }
    if (exp < 0) {
      throw Error(ErrorCode::InvalidArgument, "exponent must be >= 0");
    }
    merged[var] += exp;
  }
  MultiIndex m;
  for (const auto& [var, exp] : merged) {
    if (exp > 0) m.entries_.emplace_back(var, exp);
  }
  return m;
}

int MultiIndex::degree() const noexcept {
  int d = 0;
  for (const auto& [var, exp] : entries_) d += exp;
  return d;
}

int MultiIndex::max_variable() const noexcept {
  return entries_.empty() ? 0 : entries_.back().first;
}

int MultiIndex::exponent(int variable) const noexcept {
  for (const auto& [var, exp] : entries_) {
    if (var == variable) return exp;
    if (var > variable) break;
  }
  return 0;
}

std::vector<int> MultiIndex::support() const {
  std::vector<int> vars;
  vars.reserve(entries_.size());
  for (const auto& [var, exp] : entries_) vars.push_back(var);
  return vars;
}

MultiIndex MultiIndex::plus(const MultiIndex& other) const {
  MultiIndex out;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      out.entries_.push_back(*b++);
    } else {
      out.entries_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

std::optional<MultiIndex> MultiIndex::minus(const MultiIndex& other) const {
  MultiIndex out;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      return std::nullopt;  // other has a variable this index lacks
    } else {
      int diff = a->second - b->second;
      if (diff < 0) return std::nullopt;
      if (diff > 0) out.entries_.emplace_back(a->first, diff);
      ++a;
      ++b;
    }
  }
  return out;
}

bool MultiIndex::contains(const MultiIndex& other) const noexcept {
  for (const auto& [var, exp] : other.entries_) {
    if (exponent(var) < exp) return false;
  }
  return true;
}

MultiIndex MultiIndex::with_increment(int variable, int delta) const {
  int current = exponent(variable);
  int next = current + delta;
  if (variable < 1 || next < 0) {
    throw Error(ErrorCode::InvalidArgument, "exponent increment out of range");
  }
  MultiIndex out;
  bool placed = false;
  for (const auto& [var, exp] : entries_) {
    if (var == variable) {
      if (next > 0) out.entries_.emplace_back(var, next);
      placed = true;
    } else {
      if (!placed && var > variable && next > 0) {
        out.entries_.emplace_back(variable, next);
        placed = true;
      }
      out.entries_.emplace_back(var, exp);
    }
  }
  if (!placed && next > 0) out.entries_.emplace_back(variable, next);
  std::sort(out.entries_.begin(), out.entries_.end());
  return out;
}

std::string MultiIndex::to_string() const {
  if (entries_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [var, exp] : entries_) {
    if (!first) os << "*";
    os << "z" << var;
    if (exp > 1) os << "^" << exp;
    first = false;
  }
  return os.str();
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const noexcept {
  if (auto cmp = degree() <=> other.degree(); cmp != 0) return cmp;
  return std::lexicographical_compare_three_way(
      entries_.begin(), entries_.end(), other.entries_.begin(), other.entries_.end());
}

}  // namespace holodyn
