// Copyright (c) the holodyn developers
// SPDX-License-Identifier: Apache-2.0

#include "holodyn/presets.hpp"

#include "doctest.h"
#include "holodyn/errors.hpp"
#include "test_util.hpp"

using namespace holodyn;
using holodyn::test::thrown_code;

TEST_CASE("complex literals") {
  CHECK(parse_complex_literal("2") == Complex(2, 0));
  CHECK(parse_complex_literal("-0.5") == Complex(-0.5, 0));
  CHECK(parse_complex_literal("3i") == Complex(0, 3));
  CHECK(parse_complex_literal("i") == Complex(0, 1));
  CHECK(parse_complex_literal("-i") == Complex(0, -1));
  CHECK(parse_complex_literal("1+2i") == Complex(1, 2));
  CHECK(parse_complex_literal("2-3i") == Complex(2, -3));
  CHECK(parse_complex_literal("1.5-0.5i") == Complex(1.5, -0.5));
  CHECK(parse_complex_literal("(1+2i)") == Complex(1, 2));
  CHECK(parse_complex_literal(" 2i + 1 ") == Complex(1, 2));
  CHECK(parse_complex_literal("1e-3") == Complex(1e-3, 0));
  CHECK(parse_complex_literal("2.5E+2") == Complex(250, 0));
  CHECK(parse_complex_literal("1e-3+2e-4i") == Complex(1e-3, 2e-4));

  CHECK(thrown_code([] { parse_complex_literal(""); }) == ErrorCode::ConfigError);
  CHECK(thrown_code([] { parse_complex_literal("abc"); }) == ErrorCode::ConfigError);
  CHECK(thrown_code([] { parse_complex_literal("1+2"); }) == ErrorCode::ConfigError);
  CHECK(thrown_code([] { parse_complex_literal("i+2i"); }) == ErrorCode::ConfigError);
}

TEST_CASE("complex and radius lists") {
  std::vector<Complex> values = parse_complex_list("1,2i,-3");
  REQUIRE(values.size() == 3);
  CHECK(values[0] == Complex(1, 0));
  CHECK(values[1] == Complex(0, 2));
  CHECK(values[2] == Complex(-3, 0));
  CHECK(parse_complex_list("(1+2i),3").front() == Complex(1, 2));

  std::vector<Radius> radii = parse_radius_list("1,2.5");
  REQUIRE(radii.size() == 2);
  CHECK(radii[0].value == 1.0);
  CHECK(radii[1].value == 2.5);

  CHECK(thrown_code([] { parse_complex_list(""); }) == ErrorCode::ConfigError);
  CHECK(thrown_code([] { parse_radius_list("1,x"); }) == ErrorCode::ConfigError);
  CHECK(thrown_code([] { parse_radius_list("0"); }) == ErrorCode::InvalidArgument);
  CHECK(thrown_code([] { parse_radius_list("-1"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("operator specs") {
  ConvolutionSymbol d1 = parse_operator_spec("d1");
  CHECK(d1 == ConvolutionSymbol::derivative(1));
  CHECK(d1.label() == "d1");

  ConvolutionSymbol affine = parse_operator_spec("2*id+d1");
  CHECK(affine.coefficient(MultiIndex{}) == Complex(2, 0));
  CHECK(affine.coefficient(MultiIndex::unit(1)) == Complex(1, 0));
  CHECK(affine.label() == "2*id+d1");

  CHECK(parse_operator_spec("0.5*id") ==
        ConvolutionSymbol::identity(Complex(0.5, 0)));
  CHECK(parse_operator_spec("d1^2*d2").coefficient(
            MultiIndex::from_pairs({{1, 2}, {2, 1}})) == Complex(1, 0));
  CHECK(parse_operator_spec("(1+2i)*d3").coefficient(MultiIndex::unit(3)) ==
        Complex(1, 2));
  CHECK(parse_operator_spec("d1+d1").coefficient(MultiIndex::unit(1)) ==
        Complex(2, 0));

  ConvolutionSymbol from_json = parse_operator_spec(
      R"({"label":"j","symbol":[{"exp":{"1":1},"re":2.0,"im":0.0}]})");
  CHECK(from_json.coefficient(MultiIndex::unit(1)) == Complex(2, 0));
  CHECK(from_json.label() == "j");

  CHECK(parse_operator_spec("translation:1") ==
        translation_expansion({{Complex(1, 0)}}, 60));
  ConvolutionSymbol tau = parse_operator_spec("translation:1,0.5i@40");
  CHECK(tau == translation_expansion({{Complex(1, 0), Complex(0, 0.5)}}, 40));
  CHECK(tau.order() == 40);

  CHECK(thrown_code([] { parse_operator_spec(""); }) == ErrorCode::ConfigError);
  CHECK(thrown_code([] { parse_operator_spec("d0"); }) == ErrorCode::ConfigError);
  CHECK(thrown_code([] { parse_operator_spec("d1^0"); }) == ErrorCode::ConfigError);
  CHECK(thrown_code([] { parse_operator_spec("q9"); }) == ErrorCode::ConfigError);
  CHECK(thrown_code([] { parse_operator_spec("translation:"); }) ==
        ErrorCode::ConfigError);
  CHECK(thrown_code([] { parse_operator_spec("translation:1@-2"); }) ==
        ErrorCode::ConfigError);
}

TEST_CASE("function specs") {
  CHECK(parse_function_spec("zero").is_zero());
  CHECK(parse_function_spec("one") == Series::constant(Complex(1, 0)));
  CHECK(parse_function_spec("z1") == Series::variable(1));
  CHECK(parse_function_spec("z1^2*z2") ==
        Series::monomial(MultiIndex::from_pairs({{1, 2}, {2, 1}}), Complex(1, 0)));

  Series affine = parse_function_spec("2*z1+1");
  CHECK(affine.coefficient(MultiIndex{}) == Complex(1, 0));
  CHECK(affine.coefficient(MultiIndex::unit(1)) == Complex(2, 0));
  CHECK(affine.truncation_degree() == 1);
  CHECK(parse_function_spec("z1+z1").coefficient(MultiIndex::unit(1)) ==
        Complex(2, 0));

  CHECK(parse_function_spec("gap:1") == gap_series(default_gap_blocks(), 1));
  CHECK(parse_function_spec("gap:2:1,3,9") == gap_series({1, 3, 9}, 2));
  CHECK(parse_function_spec("exp:1:10") == exp_function({Complex(1, 0)}, 10));
  CHECK(parse_function_spec("exp:1,1:8") ==
        exp_function({Complex(1, 0), Complex(1, 0)}, 8));
  CHECK(parse_function_spec(R"({"truncation_degree":1,"terms":[{"exp":{"2":1},"re":1.0}]})") ==
        Series::variable(2));

  CHECK(thrown_code([] { parse_function_spec(""); }) == ErrorCode::ConfigError);
  CHECK(thrown_code([] { parse_function_spec("z0"); }) == ErrorCode::ConfigError);
  CHECK(thrown_code([] { parse_function_spec("gap:1:2:3"); }) == ErrorCode::ConfigError);
  CHECK(thrown_code([] { parse_function_spec("exp:1"); }) == ErrorCode::ConfigError);
  CHECK(thrown_code([] { parse_function_spec("gap:1:0"); }) ==
        ErrorCode::InvalidArgument);
  CHECK(thrown_code([] { parse_function_spec("gap:1:200"); }) ==
        ErrorCode::BlockTooLarge);
}

TEST_CASE("generator lists") {
  std::vector<Series> gens = parse_generator_list("z1;z2^2");
  REQUIRE(gens.size() == 2);
  CHECK(gens[0] == Series::variable(1));
  CHECK(gens[1] == Series::monomial(MultiIndex::from_pairs({{2, 2}}), Complex(1, 0)));
  CHECK(parse_generator_list("z1; ;z2").size() == 2);
  CHECK(thrown_code([] { parse_generator_list(""); }) == ErrorCode::ConfigError);
  CHECK(thrown_code([] { parse_generator_list(";;"); }) == ErrorCode::ConfigError);
}
