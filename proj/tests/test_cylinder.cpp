// Copyright (c) the holodyn developers
// SPDX-License-Identifier: Apache-2.0

#include "holodyn/cylinder.hpp"

#include "doctest.h"
#include "holodyn/errors.hpp"
#include "holodyn/property_suites.hpp"
#include "test_util.hpp"

using namespace holodyn;
using holodyn::test::thrown_code;

TEST_CASE("cylinder index validation") {
  CHECK(CylinderIndex(1).n == 1);
  CHECK(thrown_code([] { CylinderIndex(0); }) == ErrorCode::InvalidArgument);
  CHECK(thrown_code([] { CylinderIndex(-3); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("essential dimension") {
  CHECK(essential_dimension(Series::zero()) == 0);
  CHECK(essential_dimension(Series::constant(Complex(2, 1))) == 0);
  CHECK(essential_dimension(Series::variable(1)) == 1);
  Series f = Series::variable(1) + Series::variable(7);
  CHECK(essential_dimension(f) == 7);
}

TEST_CASE("embed validates the asserted cylinder") {
  Series f = Series::variable(2) * Series::variable(2);
  Series g = embed(f, CylinderIndex(2));
  CHECK(g == f);  // one shared data model: embedding is the identity
  CHECK(embed(f, CylinderIndex(9)) == f);
  CHECK(thrown_code([&] { embed(f, CylinderIndex(1)); }) ==
        ErrorCode::DimensionTooSmall);
  CHECK(embed(Series::constant(Complex(1, 0)), CylinderIndex(1)).term_count() == 1);
}

TEST_CASE("restrict_to drops the far coordinates") {
  Series f = Series::variable(1) + Series::variable(2) +
             Series::variable(1) * Series::variable(3);
  Series r2 = restrict_to(f, CylinderIndex(2));
  CHECK(r2.term_count() == 2);
  CHECK(r2.coefficient(MultiIndex::unit(1)) == Complex(1, 0));
  CHECK(r2.coefficient(MultiIndex::unit(2)) == Complex(1, 0));
  Series r1 = restrict_to(f, CylinderIndex(1));
  CHECK(r1 == Series::from_terms({{MultiIndex::unit(1), Complex(1, 0)}},
                                 f.truncation_degree()));
  CHECK(restrict_to(r2, CylinderIndex(2)) == r2);  // projection: idempotent
}

TEST_CASE("restrict_to truncates exponential tails") {
  Series e = exp_function({Complex(1, 0), Complex(2, 0), Complex(3, 0)}, 2);
  Series r = restrict_to(e, CylinderIndex(2));
  REQUIRE(r.tail().has_value());
  const auto& t = std::get<ExponentialTail>(*r.tail());
  CHECK(t.lambda == std::vector<Complex>{Complex(1, 0), Complex(2, 0)});
  // The restricted tail bound equals the tail of the restricted exponential.
  Series direct = exp_function({Complex(1, 0), Complex(2, 0)}, 2);
  CHECK(tail_bound(*r.tail(), 1.5) ==
        doctest::Approx(tail_bound(*direct.tail(), 1.5)));
}

TEST_CASE("restrict_to collapses gap tails on dropped variables") {
  // A gap series stored only up to degree 4 of its blocks: the m = 8 block
  // lives in the tail, so the bound is genuinely nonzero.
  Series g = Series::from_terms(
      {{MultiIndex::from_pairs({{3, 2}}), Complex(0.5, 0)},
       {MultiIndex::from_pairs({{3, 4}}), Complex(1.0 / 24.0, 0)}},
      4, GapTail{3, {2, 4, 8}, 4, 1.0});
  REQUIRE(g.tail().has_value());
  CHECK(tail_bound(*g.tail(), 2.0) > 0.0);

  Series kept = restrict_to(g, CylinderIndex(3));
  REQUIRE(kept.tail().has_value());
  const auto& kt = std::get<GapTail>(*kept.tail());
  CHECK(kt.variable == 3);
  CHECK(kt.blocks == std::vector<int>{2, 4, 8});
  CHECK(tail_bound(*kept.tail(), 2.0) == tail_bound(*g.tail(), 2.0));

  Series dropped = restrict_to(g, CylinderIndex(2));
  CHECK(dropped.is_zero());
  REQUIRE(dropped.tail().has_value());
  CHECK(tail_bound(*dropped.tail(), 2.0) == 0.0);

  // The fully stored gap series has nothing left in its tail by
  // construction: the descriptor records structure, the bound is 0.
  CHECK(tail_bound(*gap_series({2, 4, 8}, 3).tail(), 2.0) == 0.0);
}

TEST_CASE("coefficient functional") {
  Series f = Complex(2, 1) * Series::monomial(MultiIndex::from_pairs({{1, 2}, {3, 1}}),
                                              Complex(1, 0));
  CHECK(coefficient_functional(f, MultiIndex::from_pairs({{1, 2}, {3, 1}})) ==
        Complex(2, 1));
  CHECK(coefficient_functional(f, MultiIndex::unit(1)) == Complex(0, 0));
  // Vanishes identically on cylinders the index reaches past.
  DeterministicRng rng(21);
  MultiIndex beyond = MultiIndex::unit(5);
  for (int i = 0; i < 50; ++i) {
    Series g = random_polynomial(rng);  // essential dimension <= 4
    CHECK(coefficient_functional(g, beyond) == Complex(0, 0));
  }
}

TEST_CASE("restriction identity on random inputs") {
  DeterministicRng rng(22);
  for (int i = 0; i < 100; ++i) {
    Series f = random_polynomial(rng);
    int n = std::max(1, essential_dimension(f));
    CHECK(restrict_to(embed(f, CylinderIndex(n)), CylinderIndex(n)) == f);
    CHECK(restrict_to(f, CylinderIndex(n + 3)) == f);
  }
}
