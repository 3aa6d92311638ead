// Copyright (c) the holodyn developers
// SPDX-License-Identifier: Apache-2.0

#include "holodyn/multi_index.hpp"

#include "doctest.h"
#include "holodyn/errors.hpp"
#include "test_util.hpp"

using holodyn::ErrorCode;
using holodyn::MultiIndex;
using holodyn::test::thrown_code;

TEST_CASE("construction merges and validates") {
  MultiIndex a = MultiIndex::from_pairs({{2, 1}, {1, 2}, {2, 3}});
  CHECK(a.degree() == 6);
  CHECK(a.exponent(1) == 2);
  CHECK(a.exponent(2) == 4);
  CHECK(a.exponent(3) == 0);
  CHECK(a.max_variable() == 2);
  CHECK(a.support() == std::vector<int>{1, 2});

  CHECK(MultiIndex::from_pairs({{1, 0}}) == MultiIndex{});
  CHECK(MultiIndex::from_pairs({}).empty());
  CHECK(MultiIndex::unit(3).exponent(3) == 1);

  CHECK(thrown_code([] { MultiIndex::from_pairs({{0, 1}}); }) ==
        ErrorCode::InvalidArgument);
  CHECK(thrown_code([] { MultiIndex::from_pairs({{1, -1}}); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("arithmetic on exponents") {
  MultiIndex a = MultiIndex::from_pairs({{1, 2}, {3, 1}});
  MultiIndex b = MultiIndex::from_pairs({{1, 1}, {2, 2}});

  MultiIndex sum = a.plus(b);
  CHECK(sum == MultiIndex::from_pairs({{1, 3}, {2, 2}, {3, 1}}));

  CHECK(sum.minus(a) == b);
  CHECK(!a.minus(b).has_value());
  CHECK(sum.contains(a));
  CHECK(sum.contains(b));
  CHECK(!a.contains(b));
  CHECK(a.contains(MultiIndex{}));

  CHECK(a.with_increment(1, -1) == MultiIndex::from_pairs({{1, 1}, {3, 1}}));
  CHECK(a.with_increment(1, -2) == MultiIndex::unit(3));
  CHECK(a.with_increment(2, 1) == MultiIndex::from_pairs({{1, 2}, {2, 1}, {3, 1}}));
}

TEST_CASE("graded-lex order: degree first, then the pair sequence") {
  MultiIndex one;                                         // 1
  MultiIndex z1 = MultiIndex::unit(1);                    // z1
  MultiIndex z2 = MultiIndex::unit(2);                    // z2
  MultiIndex z1z2 = MultiIndex::from_pairs({{1, 1}, {2, 1}});
  MultiIndex z1sq = MultiIndex::from_pairs({{1, 2}});
  MultiIndex z2sq = MultiIndex::from_pairs({{2, 2}});

  CHECK(one < z1);
  CHECK(z1 < z2);
  CHECK(z2 < z1z2);  // degree wins
  CHECK(z1z2 < z1sq);
  CHECK(z1sq < z2sq);
  CHECK(!(z1 < z1));
}

TEST_CASE("rendering") {
  CHECK(MultiIndex{}.to_string() == "1");
  CHECK(MultiIndex::from_pairs({{1, 2}, {3, 1}}).to_string() == "z1^2*z3");
}
