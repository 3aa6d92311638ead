// Copyright (c) the holodyn developers
// SPDX-License-Identifier: Apache-2.0

#ifndef HOLODYN_PRESETS_HPP_
#define HOLODYN_PRESETS_HPP_

#include <string>
#include <vector>

#include "holodyn/series.hpp"
#include "holodyn/symbol.hpp"

namespace holodyn {

/// Complex literals: "2", "-0.5", "3i", "1+2i", "1.5-0.5i", optionally in
/// parentheses. Exponent markers ("1e-3") survive. Throws ConfigError.
Complex parse_complex_literal(const std::string& text);

std::vector<Complex> parse_complex_list(const std::string& text, char separator = ',');

/// "1,2" -> {1, 2}; every entry must be a positive finite real.
std::vector<Radius> parse_radius_list(const std::string& text);

/// Operator specs:
///   - inline JSON ({"label": ..., "symbol": [...]})
///   - "translation:<xi list>[@cutoff]", e.g. "translation:1" or
///     "translation:1,0.5i@40" (default cutoff supplied by the caller)
///   - sums of derivative monomials: "d1", "2*id+d1", "0.5*id",
///     "d1^2*d2", "(1+2i)*d3". Terms join with '+'; coefficients with
///     imaginary parts go in parentheses.
ConvolutionSymbol parse_operator_spec(const std::string& spec,
                                      int translation_cutoff = 60);

/// Function specs:
///   - inline JSON ({"truncation_degree": ..., "terms": [...]})
///   - "gap:<j>" (blocks 2^0..2^7) or "gap:<j>:<m0,m1,...>"
///   - "exp:<lambda list>:<degree>", e.g. "exp:1:10" or "exp:1,1:8"
///   - polynomials in z: "z1", "z1^2*z2", "2*z1+1", "one", "zero"
Series parse_function_spec(const std::string& spec);

/// Semicolon-separated function specs, e.g. "z1;z2^2".
std::vector<Series> parse_generator_list(const std::string& spec);

}  // namespace holodyn

#endif  // HOLODYN_PRESETS_HPP_
