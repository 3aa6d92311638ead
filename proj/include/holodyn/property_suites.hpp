// Copyright (c) the holodyn developers
// SPDX-License-Identifier: Apache-2.0

#ifndef HOLODYN_PROPERTY_SUITES_HPP_
#define HOLODYN_PROPERTY_SUITES_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "holodyn/series.hpp"
#include "holodyn/symbol.hpp"

namespace holodyn {

/// Seeded, portable randomness: mt19937_64 plus hand-rolled uniforms, so the
/// same seed reproduces the same instances on every platform.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : gen_(seed) {}

  double uniform();  // [0, 1)
  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);  // inclusive
  Complex unit_square();            // re, im in [0, 1)

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

/// Random population used across the identity suites: symbols with variable
/// span <= 3 and order <= 4, polynomials with degree <= 6 and at most 12
/// terms, translation vectors of length <= 3 — all with coefficients in the
/// unit square.
ConvolutionSymbol random_symbol(DeterministicRng& rng);
Series random_polynomial(DeterministicRng& rng);
TranslationVector random_translation(DeterministicRng& rng);

struct SuiteResult {
  std::string name;
  int total = 0;
  int passed = 0;
  std::vector<std::string> failures;  // at most a handful, with case indices

  bool ok() const { return passed == total && failures.empty(); }
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  int cases = 100;
};

/// restrict(embed(f, n), n) == f bit-exactly, plus the cylinder inclusion
/// chain embed(embed(f, n), m) == embed(f, m) for m >= n.
SuiteResult run_restriction_identity_suite(const SuiteOptions& options);

/// apply(L, embed(f, n)) == embed(apply(L_n, f), n) bit-exactly, where L_n is
/// the associated operator at n.
SuiteResult run_factorization_suite(const SuiteOptions& options);

/// The k-fold version (k <= 5) of the factorization, bit-exact.
SuiteResult run_power_factorization_suite(const SuiteOptions& options);

/// essential_dimension(L^k f) <= essential_dimension(f) for all k <= 5.
SuiteResult run_confinement_suite(const SuiteOptions& options);

/// Translations supported beyond the function's cylinder act as the
/// identity, bit-exactly.
SuiteResult run_translation_identity_suite(const SuiteOptions& options);

/// apply(L, translate(f, xi)) == translate(apply(L, f), xi) within 1e-9
/// relative coefficient distance (binomial path vs symbol path).
SuiteResult run_convolution_commutation_suite(const SuiteOptions& options);

/// L is trivial iff the associated operator is trivial at *every*
/// n = 1..variable_span(L)+1 (a single collapsed restriction proves
/// nothing), and restrictions of trivial operators stay trivial.
SuiteResult run_triviality_suite(const SuiteOptions& options);

std::vector<SuiteResult> run_all_suites(const SuiteOptions& options);

}  // namespace holodyn

#endif  // HOLODYN_PROPERTY_SUITES_HPP_
