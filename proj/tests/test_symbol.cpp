// Copyright (c) the holodyn developers
// SPDX-License-Identifier: Apache-2.0

#include "holodyn/symbol.hpp"

#include <cmath>

#include "doctest.h"
#include "holodyn/errors.hpp"
#include "holodyn/property_suites.hpp"
#include "test_util.hpp"

using namespace holodyn;
using holodyn::test::close_rel;
using holodyn::test::thrown_code;

namespace {

Series z(int j) { return Series::variable(j); }

const ConvolutionSymbol d1 = ConvolutionSymbol::derivative(1);
const ConvolutionSymbol d2 = ConvolutionSymbol::derivative(2);

}  // namespace

TEST_CASE("symbol construction and structure") {
  CHECK(ConvolutionSymbol().is_trivial());
  CHECK(ConvolutionSymbol::identity().is_trivial());
  CHECK(ConvolutionSymbol::identity(Complex(0, 0)).is_trivial());
  CHECK(!d1.is_trivial());
  CHECK(ConvolutionSymbol::from_coefficients(
            {{MultiIndex::unit(1), Complex(1e-15, 0)}})
            .is_trivial() == false);

  ConvolutionSymbol L = ConvolutionSymbol::from_coefficients(
      {{MultiIndex{}, Complex(2, 0)},
       {MultiIndex::from_pairs({{1, 1}, {3, 2}}), Complex(0, 1)},
       {MultiIndex::unit(2), Complex(0, 0)}},
      "demo");
  CHECK(L.coefficients().size() == 2);  // exact zero dropped
  CHECK(L.order() == 3);
  CHECK(L.variable_span() == 3);
  CHECK(L.label() == "demo");
  CHECK(L.with_label("other").label() == "other");
  CHECK(L.with_label("other") == L);  // labels ignored by equality
  CHECK(d1.order() == 1);
  CHECK(ConvolutionSymbol::identity(Complex(3, 0)).order() == 0);
  CHECK(ConvolutionSymbol::identity(Complex(3, 0)).variable_span() == 0);
}

TEST_CASE("apply basic derivative rules") {
  // The truncation degree is carried through unchanged (a mixed symbol like
  // id + d1^2 keeps high-degree terms), so expectations state it explicitly.
  CHECK(apply(d1, z(1) * z(1)) ==
        Series::from_terms({{MultiIndex::unit(1), Complex(2, 0)}}, 2));
  CHECK(apply(d1, z(1) * z(1)).truncation_degree() == 2);
  CHECK(apply(d1, z(2)).is_zero());
  CHECK(apply(ConvolutionSymbol::identity(Complex(2, 0)), z(1)) ==
        Complex(2, 0) * z(1));
  CHECK(apply(ConvolutionSymbol(), z(1)).is_zero());

  // (d1 + d2) on z1*z2 = z2 + z1.
  ConvolutionSymbol sum = ConvolutionSymbol::from_coefficients(
      {{MultiIndex::unit(1), Complex(1, 0)}, {MultiIndex::unit(2), Complex(1, 0)}});
  Series out = apply(sum, z(1) * z(2));
  CHECK(out == Series::from_terms({{MultiIndex::unit(1), Complex(1, 0)},
                                   {MultiIndex::unit(2), Complex(1, 0)}},
                                  2));

  // d^(2,1) on z1^2 z2 = 2.
  ConvolutionSymbol mixed = ConvolutionSymbol::from_coefficients(
      {{MultiIndex::from_pairs({{1, 2}, {2, 1}}), Complex(1, 0)}});
  CHECK(apply(mixed, z(1) * z(1) * z(2)) ==
        Series::from_terms({{MultiIndex{}, Complex(2, 0)}}, 3));
}

TEST_CASE("apply matches repeated partial_derivative") {
  DeterministicRng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    Series f = random_polynomial(rng);
    Series via_apply = apply(d1, f);
    CHECK(coefficient_table_distance(via_apply, partial_derivative(f, 1)) == 0.0);
  }
}

TEST_CASE("apply propagates exponential tails soundly") {
  Series e = exp_function({Complex(0.5, 0), Complex(0.25, 0)}, 6);
  ConvolutionSymbol L = ConvolutionSymbol::from_coefficients(
      {{MultiIndex{}, Complex(1, 0)}, {MultiIndex::from_pairs({{1, 2}})
, Complex(2, 0)}});
  Series Le = apply(L, e);
  REQUIRE(Le.tail().has_value());
  const auto& t = std::get<ExponentialTail>(*Le.tail());
  // Inflation factor sum |c_beta| |lambda|^beta = 1 + 2 * 0.5^2 = 1.5.
  CHECK(t.scale == doctest::Approx(1.5));
  CHECK(t.from_degree == 4);  // shifted down by the operator order

  // Gap tails survive only pure powers of the same variable.
  Series g = gap_series({4, 8}, 1);
  CHECK(apply(ConvolutionSymbol::from_coefficients(
                  {{MultiIndex::from_pairs({{1, 2}}), Complex(1, 0)}}),
              g)
            .tail()
            .has_value());
  CHECK(!apply(L, g).tail().has_value());  // two-term symbol: bound dropped
}

TEST_CASE("iterate_apply") {
  Series f = z(1) * z(1) * z(1);
  CHECK(iterate_apply(d1, f, 0) == f);
  CHECK(iterate_apply(d1, f, 2) ==
        Series::from_terms({{MultiIndex::unit(1), Complex(6, 0)}}, 3));
  CHECK(iterate_apply(d1, f, 4).is_zero());
  CHECK(thrown_code([&] { iterate_apply(d1, f, -1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("translate by the binomial shift") {
  // tau_xi f (z) = f(z - xi); for f = z1^2, xi = (1): (z1 - 1)^2.
  Series f = z(1) * z(1);
  Series shifted = translate(f, {{Complex(1, 0)}});
  CHECK(shifted.coefficient(MultiIndex{}) == Complex(1, 0));
  CHECK(shifted.coefficient(MultiIndex::unit(1)) == Complex(-2, 0));
  CHECK(shifted.coefficient(MultiIndex::from_pairs({{1, 2}})) == Complex(1, 0));

  CHECK(translate(f, {{}}) == f);
  CHECK(translate(f, {{Complex(0, 0), Complex(3, 0)}}) == f);

  // Group law tau_a tau_b = tau_{a+b} holds exactly on integer shifts.
  Series g = z(1) * z(1) * z(2) + z(2);
  Series two_steps = translate(translate(g, {{Complex(1, 0)}}),
                               {{Complex(2, 0), Complex(-1, 0)}});
  Series one_step = translate(g, {{Complex(3, 0), Complex(-1, 0)}});
  CHECK(coefficient_table_distance(two_steps, one_step) <= 1e-15);

  // Evaluation identity at concrete points.
  DeterministicRng rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    Series h = random_polynomial(rng);
    TranslationVector xi = random_translation(rng);
    std::vector<Complex> p{rng.unit_square(), rng.unit_square(), rng.unit_square(),
                           rng.unit_square()};
    std::vector<Complex> p_minus = p;
    for (std::size_t i = 0; i < xi.xi.size() && i < p_minus.size(); ++i) {
      p_minus[i] -= xi.xi[i];
    }
    Complex lhs = evaluate(translate(h, xi), p);
    Complex rhs = evaluate(h, p_minus);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("translation expansion agrees with the binomial path") {
  DeterministicRng rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    Series f = random_polynomial(rng);
    TranslationVector xi = random_translation(rng);
    ConvolutionSymbol tau = translation_expansion(xi, f.truncation_degree());
    CHECK(coefficient_table_distance(apply(tau, f), translate(f, xi)) <= 1e-9);
  }
  ConvolutionSymbol tau0 = translation_expansion({{}}, 4);
  CHECK(tau0 == ConvolutionSymbol::identity());
  CHECK(thrown_code([] { translation_expansion({{Complex(1, 0)}}, -1); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("associated operator keeps the first-n-variable symbol") {
  ConvolutionSymbol L = ConvolutionSymbol::from_coefficients(
      {{MultiIndex{}, Complex(1, 0)},
       {MultiIndex::unit(1), Complex(2, 0)},
       {MultiIndex::from_pairs({{1, 1}, {2, 1}}), Complex(3, 0)},
       {MultiIndex::unit(3), Complex(4, 0)}},
      "L");
  ConvolutionSymbol L1 = associated_operator(L, CylinderIndex(1));
  CHECK(L1.coefficients().size() == 2);
  CHECK(L1.coefficient(MultiIndex::unit(1)) == Complex(2, 0));
  CHECK(L1.label() == "L_1");
  ConvolutionSymbol L2 = associated_operator(L, CylinderIndex(2));
  CHECK(L2.coefficients().size() == 3);
  CHECK(associated_operator(L, CylinderIndex(3)) == L);
  CHECK(associated_operator(L2, CylinderIndex(2)) == L2);  // idempotent

  // A symbol can collapse to the zero operator on a small cylinder while the
  // full operator stays nontrivial.
  CHECK(associated_operator(d2, CylinderIndex(1)).is_trivial());
  CHECK(!d2.is_trivial());
}

TEST_CASE("factorization through the cylinder is bit-identical") {
  DeterministicRng rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    Series f = random_polynomial(rng);
    ConvolutionSymbol L = random_symbol(rng);
    int n = std::max({1, essential_dimension(f), L.variable_span()});
    ConvolutionSymbol Ln = associated_operator(L, CylinderIndex(std::max(1, essential_dimension(f))));
    // Terms of the symbol beyond the variables of f contribute no floating
    // point operations, so the two paths agree exactly.
    Series full = apply(L, embed(f, CylinderIndex(n)));
    Series associated = apply(Ln, f);
    CHECK(restrict_to(full, CylinderIndex(std::max(1, essential_dimension(f)))) ==
          associated);
  }
}

TEST_CASE("associated translation operators translate the projected vector") {
  // tau_xi associated to the first cylinder equals translation by (xi_1).
  TranslationVector xi{{Complex(0.5, 0.25), Complex(2, 0), Complex(-1, 1)}};
  ConvolutionSymbol tau = translation_expansion(xi, 12);
  ConvolutionSymbol tau1 = associated_operator(tau, CylinderIndex(1));
  ConvolutionSymbol direct = translation_expansion({{Complex(0.5, 0.25)}}, 12);
  CHECK(tau1 == direct);  // bitwise: same products in the same order
}

TEST_CASE("symbol_value") {
  ConvolutionSymbol L = ConvolutionSymbol::from_coefficients(
      {{MultiIndex{}, Complex(1, 0)}, {MultiIndex::from_pairs({{1, 2}}), Complex(2, 0)}});
  CHECK(symbol_value(L, {Complex(3, 0)}) == Complex(19, 0));
  CHECK(symbol_value(L, {}) == Complex(1, 0));
  CHECK(symbol_value(d2, {Complex(5, 0)}) == Complex(0, 0));
  CHECK(symbol_value(ConvolutionSymbol(), {Complex(1, 0)}) == Complex(0, 0));

  // phi is multiplicative over operator composition on exponentials; check
  // the value against a direct eigen quotient at high truncation.
  std::vector<Complex> lambda{Complex(0.4, 0.1)};
  Series e = exp_function(lambda, 24);
  Series Le = apply(L, e);
  Complex quotient = Le.coefficient(MultiIndex{});  // (L e)(0) = phi * e(0), e(0)=1
  CHECK(std::abs(quotient - symbol_value(L, lambda)) <= 1e-12);
}

TEST_CASE("eigen consistency bound decreases in the truncation degree") {
  ConvolutionSymbol L = ConvolutionSymbol::from_coefficients(
      {{MultiIndex::unit(1), Complex(1, 0)}, {MultiIndex::from_pairs({{1, 2}}), Complex(0, 1)}});
  std::vector<Complex> lambda{Complex(1, 0)};
  Radius r(1.0);
  double b10 = eigen_consistency_bound(L, lambda, 10, r);
  double b20 = eigen_consistency_bound(L, lambda, 20, r);
  CHECK(b10 > 0.0);
  CHECK(b20 > 0.0);
  CHECK(b10 / b20 >= 10.0);  // super-exponential decay in D

  // The bound really dominates the defect of the truncated eigen relation.
  DeterministicRng rng(35);
  for (int trial = 0; trial < 25; ++trial) {
    ConvolutionSymbol M = random_symbol(rng);
    std::vector<Complex> lam{rng.unit_square(), rng.unit_square()};
    int D = rng.uniform_int(6, 14);
    Radius rr(rng.uniform(0.3, 1.5));
    Series e = exp_function(lam, D);
    Series defect = apply(M, e.without_tail()) -
                    Complex(symbol_value(M, lam)) * e.without_tail();
    double measured = majorant_seminorm(defect, rr);
    double bound = eigen_consistency_bound(M, lam, D, rr);
    CHECK(measured <= bound * (1.0 + 1e-9) + 1e-12);
  }
}

TEST_CASE("dichotomy search finds both sides for the basic derivative") {
  DichotomyResult res = find_dichotomy_points(d1);
  REQUIRE(res.found);
  CHECK(res.small_value < 1.0);
  CHECK(res.big_value > 1.0);
  CHECK(std::abs(symbol_value(d1, res.lambda_small)) == doctest::Approx(res.small_value));
  CHECK(std::abs(symbol_value(d1, res.lambda_big)) == doctest::Approx(res.big_value));
  CHECK(!res.log.empty());
}

TEST_CASE("dichotomy search is deterministic") {
  ConvolutionSymbol L = ConvolutionSymbol::from_coefficients(
      {{MultiIndex{}, Complex(2, 0)}, {MultiIndex::unit(1), Complex(1, 0)},
       {MultiIndex::unit(2), Complex(0, 1)}},
      "2+d1+i*d2");
  DichotomyResult a = find_dichotomy_points(L);
  DichotomyResult b = find_dichotomy_points(L);
  REQUIRE(a.found);
  CHECK(a.lambda_small == b.lambda_small);
  CHECK(a.lambda_big == b.lambda_big);
  CHECK(a.small_value == b.small_value);
  CHECK(a.big_value == b.big_value);
  CHECK(a.log == b.log);
}

TEST_CASE("dichotomy search handles hard and trivial cases") {
  CHECK(thrown_code([] { find_dichotomy_points(ConvolutionSymbol::identity()); }) ==
        ErrorCode::TrivialOperator);
  CHECK(thrown_code([] { find_dichotomy_points(ConvolutionSymbol()); }) ==
        ErrorCode::TrivialOperator);
  CHECK(thrown_code([] {
          DichotomySearchParams p;
          p.rays = 0;
          return find_dichotomy_points(d1, p);
        }) == ErrorCode::InvalidArgument);

  // |phi| = |1 + 1e-30 lambda^2| rounds to exactly 1.0 everywhere on the
  // budgeted lattice, so neither strict inequality can be witnessed: the
  // search must report not-found rather than fake a point.
  ConvolutionSymbol stuck = ConvolutionSymbol::from_coefficients(
      {{MultiIndex{}, Complex(1, 0)},
       {MultiIndex::from_pairs({{1, 2}}), Complex(1e-30, 0)}});
  DichotomyResult res = find_dichotomy_points(stuck);
  CHECK(!res.found);
  CHECK(!res.log.empty());
}

TEST_CASE("dichotomy search covers multivariate symbols") {
  ConvolutionSymbol L = ConvolutionSymbol::from_coefficients(
      {{MultiIndex::from_pairs({{1, 1}, {2, 1}}), Complex(1, 0)}});
  DichotomyResult res = find_dichotomy_points(L);
  REQUIRE(res.found);
  CHECK(res.lambda_small.size() == 2);
  CHECK(res.small_value < 1.0);
  CHECK(res.big_value > 1.0);
}
