// Copyright (c) the holodyn developers
// SPDX-License-Identifier: Apache-2.0

#include "holodyn/presets.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "holodyn/errors.hpp"
#include "holodyn/io.hpp"

namespace holodyn {

namespace {

std::string trim(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  std::size_t end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

[[noreturn]] void bad(const std::string& what, const std::string& text) {
  throw Error(ErrorCode::ConfigError, what + ": '" + text + "'");
}

double parse_real(const std::string& text) {
  if (text.empty()) bad("empty number", text);
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) bad("bad number", text);
  return v;
}

// Splits at top-level occurrences of any separator in `seps` (depth tracked
// through parentheses), keeping empty pieces out.
std::vector<std::string> split_top_level(const std::string& text,
                                         const std::string& seps) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && seps.find(c) != std::string::npos) {
      if (!trim(current).empty()) parts.push_back(trim(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!trim(current).empty()) parts.push_back(trim(current));
  return parts;
}

}  // namespace

Complex parse_complex_literal(const std::string& raw) {
  std::string text;
  for (char c : raw) {  // literals never need whitespace, even internally
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  }
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = text.substr(1, text.size() - 2);
  }
  if (text.empty()) bad("empty complex literal", raw);

  // Find a top-level +/- separating real and imaginary parts (skip the sign
  // of the leading term and exponent signs like 1e-3).
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < text.size(); ++i) {
    char c = text[i];
    if ((c == '+' || c == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
      split = i;
    }
  }

  auto parse_part = [&](std::string part, bool* is_imag) {
    part = trim(part);
    *is_imag = !part.empty() && (part.back() == 'i' || part.back() == 'I');
    if (*is_imag) {
      part.pop_back();
      part = trim(part);
      if (part.empty() || part == "+") part = "1";
      if (part == "-") part = "-1";
    }
    return parse_real(part);
  };

  if (split == std::string::npos) {
    bool imag = false;
    double v = parse_part(text, &imag);
    return imag ? Complex(0.0, v) : Complex(v, 0.0);
  }
  bool first_imag = false, second_imag = false;
  double a = parse_part(text.substr(0, split), &first_imag);
  double b = parse_part(text.substr(split), &second_imag);
  if (first_imag == second_imag) bad("need one real and one imaginary part", raw);
  return first_imag ? Complex(b, a) : Complex(a, b);
}

std::vector<Complex> parse_complex_list(const std::string& text, char separator) {
  std::vector<Complex> values;
  for (const std::string& part : split_top_level(text, std::string(1, separator))) {
    values.push_back(parse_complex_literal(part));
  }
  if (values.empty()) bad("empty list", text);
  return values;
}

std::vector<Radius> parse_radius_list(const std::string& text) {
  std::vector<Radius> radii;
  for (const std::string& part : split_top_level(text, ",")) {
    radii.emplace_back(parse_real(part));  // Radius validates positivity
  }
  if (radii.empty()) bad("empty radius list", text);
  return radii;
}

namespace {

// One '+'-joined term of a derivative polynomial: factors are complex
// coefficients, "id", or "d<j>[^p]" atoms joined by '*'.
void parse_symbol_term(const std::string& term, ConvolutionSymbol::CoefficientMap& out) {
  Complex coeff(1.0, 0.0);
  std::vector<MultiIndex::Entry> exponents;
  for (const std::string& factor : split_top_level(term, "*")) {
    if (factor == "id" || factor == "Id" || factor == "1") continue;
    if (factor.size() >= 2 && (factor[0] == 'd' || factor[0] == 'D') &&
        std::isdigit(static_cast<unsigned char>(factor[1]))) {
      std::size_t caret = factor.find('^');
      int var = std::atoi(factor.substr(1, caret - 1).c_str());
      int exp = caret == std::string::npos
                    ? 1
                    : std::atoi(factor.substr(caret + 1).c_str());
      if (var < 1 || exp < 1) bad("bad derivative factor", factor);
      exponents.emplace_back(var, exp);
      continue;
    }
    coeff *= parse_complex_literal(factor);
  }
  out[MultiIndex::from_pairs(exponents)] += coeff;
}

}  // namespace

ConvolutionSymbol parse_operator_spec(const std::string& raw, int translation_cutoff) {
  std::string spec = trim(raw);
  if (spec.empty()) bad("empty operator spec", raw);
  if (spec.front() == '{') {
    return symbol_from_json(parse_json_text(spec));
  }
  if (spec.rfind("translation:", 0) == 0) {
    std::string rest = spec.substr(12);
    int cutoff = translation_cutoff;
    std::size_t at = rest.find('@');
    if (at != std::string::npos) {
      cutoff = std::atoi(rest.substr(at + 1).c_str());
      rest = rest.substr(0, at);
      if (cutoff < 0) bad("bad translation cutoff", raw);
    }
    return translation_expansion(TranslationVector{parse_complex_list(rest)}, cutoff);
  }

  ConvolutionSymbol::CoefficientMap coefficients;
  for (const std::string& term : split_top_level(spec, "+")) {
    parse_symbol_term(term, coefficients);
  }
  if (coefficients.empty()) bad("operator spec has no terms", raw);
  return ConvolutionSymbol::from_coefficients(std::move(coefficients), spec);
}

namespace {

void parse_series_term(const std::string& term, Series::TermMap& out) {
  Complex coeff(1.0, 0.0);
  std::vector<MultiIndex::Entry> exponents;
  for (const std::string& factor : split_top_level(term, "*")) {
    if (factor == "one" || factor == "1") continue;
    if (factor.size() >= 2 && (factor[0] == 'z' || factor[0] == 'Z') &&
        std::isdigit(static_cast<unsigned char>(factor[1]))) {
      std::size_t caret = factor.find('^');
      int var = std::atoi(factor.substr(1, caret - 1).c_str());
      int exp = caret == std::string::npos
                    ? 1
                    : std::atoi(factor.substr(caret + 1).c_str());
      if (var < 1 || exp < 1) bad("bad variable factor", factor);
      exponents.emplace_back(var, exp);
      continue;
    }
    coeff *= parse_complex_literal(factor);
  }
  out[MultiIndex::from_pairs(exponents)] += coeff;
}

}  // namespace

Series parse_function_spec(const std::string& raw) {
  std::string spec = trim(raw);
  if (spec.empty()) bad("empty function spec", raw);
  if (spec.front() == '{') {
    return series_from_json(parse_json_text(spec));
  }
  if (spec == "zero") return Series::zero();
  if (spec.rfind("gap:", 0) == 0) {
    std::vector<std::string> parts = split_top_level(spec.substr(4), ":");
    if (parts.empty() || parts.size() > 2) bad("gap spec needs gap:<j>[:blocks]", raw);
    int variable = std::atoi(parts[0].c_str());
    std::vector<int> blocks;
    if (parts.size() == 2) {
      for (const std::string& b : split_top_level(parts[1], ",")) {
        blocks.push_back(std::atoi(b.c_str()));
      }
    } else {
      blocks = default_gap_blocks();
    }
    return gap_series(blocks, variable);
  }
  if (spec.rfind("exp:", 0) == 0) {
    std::vector<std::string> parts = split_top_level(spec.substr(4), ":");
    if (parts.size() != 2) bad("exp spec needs exp:<lambda>:<degree>", raw);
    int degree = std::atoi(parts[1].c_str());
    return exp_function(parse_complex_list(parts[0]), degree);
  }

  Series::TermMap terms;
  for (const std::string& term : split_top_level(spec, "+")) {
    parse_series_term(term, terms);
  }
  if (terms.empty()) bad("function spec has no terms", raw);
  int degree = 0;
  for (const auto& [alpha, c] : terms) degree = std::max(degree, alpha.degree());
  return Series::from_terms(std::move(terms), degree);
}

std::vector<Series> parse_generator_list(const std::string& spec) {
  std::vector<Series> generators;
  for (const std::string& part : split_top_level(spec, ";")) {
    generators.push_back(parse_function_spec(part));
  }
  if (generators.empty()) bad("empty generator list", spec);
  return generators;
}

}  // namespace holodyn
