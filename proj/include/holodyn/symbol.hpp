// Copyright (c) the holodyn developers
// SPDX-License-Identifier: Apache-2.0

#ifndef HOLODYN_SYMBOL_HPP_
#define HOLODYN_SYMBOL_HPP_

#include <map>
#include <string>
#include <vector>

#include "holodyn/cylinder.hpp"
#include "holodyn/series.hpp"

namespace holodyn {

/// Convolution operator in derivative-symbol form: L = sum_beta c_beta d^beta.
/// Finite support, no stored coefficient exactly zero. Symbols commute with
/// every translation by construction, which is the defining property of a
/// convolution operator.
class ConvolutionSymbol {
 public:
  using CoefficientMap = std::map<MultiIndex, Complex>;

  ConvolutionSymbol() = default;  // the zero operator

  /// Drops exact zeros. The label is free-form display metadata.
  static ConvolutionSymbol from_coefficients(CoefficientMap coefficients,
                                             std::string label = "");

  /// c * Id.
  static ConvolutionSymbol identity(Complex scale = Complex(1.0, 0.0));

  /// d_j.
  static ConvolutionSymbol derivative(int variable);

  /// Reuses a series coefficient table as a symbol (same sparse format).
  static ConvolutionSymbol from_series_coefficients(const Series& f,
                                                    std::string label = "");

  const CoefficientMap& coefficients() const noexcept { return coefficients_; }
  const std::string& label() const noexcept { return label_; }
  ConvolutionSymbol with_label(std::string label) const;

  Complex coefficient(const MultiIndex& beta) const;

  /// Max derivative order over the support (0 for scalars).
  int order() const noexcept;

  /// Max variable index over the support (0 for scalars).
  int variable_span() const noexcept;

  /// Exact structural test: support inside {empty index}. No tolerance — a
  /// stored 1e-15 coefficient makes the operator nontrivial.
  bool is_trivial() const noexcept;

  /// Coefficient tables compared exactly; labels are ignored.
  bool operator==(const ConvolutionSymbol& other) const;

 private:
  CoefficientMap coefficients_;
  std::string label_;
};

/// Translation amount xi; coordinates beyond the stored length are zero.
struct TranslationVector {
  std::vector<Complex> xi;
};

/// L f = sum_beta c_beta d^beta f, exact on the stored polynomial. The
/// accumulation order is fixed (graded-lex over beta, then over the terms of
/// f), so restricting the symbol to the variables f actually uses reproduces
/// bit-identical coefficient tables — the factorization identities below hold
/// exactly, not just approximately.
Series apply(const ConvolutionSymbol& L, const Series& f);

/// L^k f. k = 0 returns f unchanged.
Series iterate_apply(const ConvolutionSymbol& L, const Series& f, int k);

/// (tau_xi f)(z) = f(z - xi), via the exact binomial shift of each term.
Series translate(const Series& f, const TranslationVector& xi);

/// The derivative-series form of tau_xi truncated at `cutoff`:
/// sum_{|beta| <= cutoff} ((-xi)^beta / beta!) d^beta. Lossless on
/// polynomials of degree <= cutoff; the identity against the binomial path is
/// a test, not an assumption.
ConvolutionSymbol translation_expansion(const TranslationVector& xi, int cutoff);

/// The associated operator L_n: keep exactly the c_beta supported on the
/// first n variables. Idempotent once n >= variable_span(L).
ConvolutionSymbol associated_operator(const ConvolutionSymbol& L, CylinderIndex n);

inline bool is_trivial(const ConvolutionSymbol& L) noexcept { return L.is_trivial(); }

/// phi(lambda) = sum_beta c_beta lambda^beta — the eigenvalue of L on the
/// exponential e_lambda. Missing coordinates are zero.
Complex symbol_value(const ConvolutionSymbol& L, const std::vector<Complex>& lambda);

/// Upper bound for p_r(L e_lambda^D - phi(lambda) e_lambda^D), the defect of
/// the eigen relation on the degree-D truncation. Tends to 0 as D grows.
double eigen_consistency_bound(const ConvolutionSymbol& L,
                               const std::vector<Complex>& lambda,
                               int truncation_degree, Radius r);

/// Deterministic search budget for the spectral dichotomy |phi| < 1 < |phi|.
struct DichotomySearchParams {
  int rays = 64;            // directions on the unit polysphere
  double t_max = 8.0;       // rays are t * u, t in [0, t_max]
  int coarse_samples = 64;  // samples per ray before refinement
  int refine_steps = 40;    // golden-section steps around the best samples
  int dimensions = 0;       // 0 = use max(variable_span(L), 1)
};

struct DichotomyResult {
  bool found = false;
  std::vector<Complex> lambda_small;  // |phi(lambda_small)| < 1
  std::vector<Complex> lambda_big;    // |phi(lambda_big)| > 1
  double small_value = 0.0;           // |phi| at lambda_small
  double big_value = 0.0;             // |phi| at lambda_big
  std::vector<std::string> log;       // full search log, one line per ray
};

/// Scans the ray lattice for the spectral dichotomy points. Not finding them
/// within the budget is a first-class outcome (found = false, log retained),
/// not an exception; existence is guaranteed mathematically for nontrivial
/// symbols, but only the search is finite. Throws TrivialOperator when
/// is_trivial(L).
DichotomyResult find_dichotomy_points(const ConvolutionSymbol& L,
                                      const DichotomySearchParams& params = {});

}  // namespace holodyn

#endif  // HOLODYN_SYMBOL_HPP_
