// Copyright (c) the holodyn developers
// SPDX-License-Identifier: Apache-2.0

#include "holodyn/property_suites.hpp"

#include <algorithm>
#include <cmath>

#include "holodyn/cylinder.hpp"

namespace holodyn {

double DeterministicRng::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double DeterministicRng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

int DeterministicRng::uniform_int(int lo, int hi) {
  return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
}

Complex DeterministicRng::unit_square() {
  double re = uniform();
  double im = uniform();
  return Complex(re, im);
}

namespace {

MultiIndex random_index(DeterministicRng& rng, int max_vars, int max_degree) {
  std::vector<MultiIndex::Entry> entries;
  int budget = rng.uniform_int(0, max_degree);
  while (budget > 0 && rng.uniform() < 0.8) {
    int var = rng.uniform_int(1, max_vars);
    int exp = rng.uniform_int(1, budget);
    entries.emplace_back(var, exp);
    budget -= exp;
  }
  return MultiIndex::from_pairs(entries);
}

}  // namespace

ConvolutionSymbol random_symbol(DeterministicRng& rng) {
  ConvolutionSymbol::CoefficientMap coefficients;
  int terms = rng.uniform_int(1, 5);
  for (int i = 0; i < terms; ++i) {
    coefficients[random_index(rng, 3, 4)] += rng.unit_square();
  }
  return ConvolutionSymbol::from_coefficients(std::move(coefficients), "random");
}

Series random_polynomial(DeterministicRng& rng) {
  Series::TermMap terms;
  int count = rng.uniform_int(1, 12);
  for (int i = 0; i < count; ++i) {
    terms[random_index(rng, 4, 6)] += rng.unit_square();
  }
  return Series::from_terms(std::move(terms), 6);
}

TranslationVector random_translation(DeterministicRng& rng) {
  int length = rng.uniform_int(1, 3);
  TranslationVector xi;
  for (int j = 0; j < length; ++j) xi.xi.push_back(rng.unit_square());
  return xi;
}

namespace {

template <typename Case>
SuiteResult run_suite(const std::string& name, const SuiteOptions& options,
                      Case&& run_case) {
  SuiteResult result;
  result.name = name;
  result.total = options.cases;
  DeterministicRng rng(options.seed);
  for (int i = 0; i < options.cases; ++i) {
    std::string failure;
    if (run_case(rng, &failure)) {
      ++result.passed;
    } else if (result.failures.size() < 5) {
      result.failures.push_back("case " + std::to_string(i) + ": " + failure);
    }
  }
  return result;
}

}  // namespace

SuiteResult run_restriction_identity_suite(const SuiteOptions& options) {
  return run_suite(
      "restriction_identity", options, [](DeterministicRng& rng, std::string* why) {
        Series f = random_polynomial(rng);
        int n = std::max(1, f.essential_dimension()) + rng.uniform_int(0, 2);
        if (!(restrict_to(embed(f, CylinderIndex(n)), CylinderIndex(n)) == f)) {
          *why = "restrict(embed(f)) != f at n=" + std::to_string(n);
          return false;
        }
        int m = n + rng.uniform_int(0, 3);
        Series chained = embed(embed(f, CylinderIndex(n)), CylinderIndex(m));
        if (!(chained == embed(f, CylinderIndex(m)))) {
          *why = "inclusion chain broke between n=" + std::to_string(n) +
                 " and m=" + std::to_string(m);
          return false;
        }
        return true;
      });
}

SuiteResult run_factorization_suite(const SuiteOptions& options) {
  return run_suite(
      "associated_factorization", options, [](DeterministicRng& rng, std::string* why) {
        ConvolutionSymbol L = random_symbol(rng);
        Series f = random_polynomial(rng);
        int n = std::max(1, f.essential_dimension());
        ConvolutionSymbol Ln = associated_operator(L, CylinderIndex(n));
        Series full = apply(L, embed(f, CylinderIndex(n)));
        Series factored = embed(apply(Ln, f), CylinderIndex(n));
        if (!(full == factored)) {
          *why = "apply(L, f) != embed(apply(L_" + std::to_string(n) +
                 ", f)) (distance " +
                 std::to_string(coefficient_table_distance(full, factored)) + ")";
          return false;
        }
        return true;
      });
}

SuiteResult run_power_factorization_suite(const SuiteOptions& options) {
  return run_suite(
      "power_factorization", options, [](DeterministicRng& rng, std::string* why) {
        ConvolutionSymbol L = random_symbol(rng);
        Series f = random_polynomial(rng);
        int n = std::max(1, f.essential_dimension());
        int k = rng.uniform_int(0, 5);
        ConvolutionSymbol Ln = associated_operator(L, CylinderIndex(n));
        Series full = iterate_apply(L, f, k);
        Series factored = embed(iterate_apply(Ln, restrict_to(f, CylinderIndex(n)), k),
                                CylinderIndex(n));
        if (!(full == factored)) {
          *why = "k-fold factorization broke at k=" + std::to_string(k) +
                 " (distance " +
                 std::to_string(coefficient_table_distance(full, factored)) + ")";
          return false;
        }
        return true;
      });
}

SuiteResult run_confinement_suite(const SuiteOptions& options) {
  return run_suite(
      "dimension_confinement", options, [](DeterministicRng& rng, std::string* why) {
        ConvolutionSymbol L = random_symbol(rng);
        Series f = random_polynomial(rng);
        int n = f.essential_dimension();
        Series g = f;
        for (int k = 1; k <= 5; ++k) {
          g = apply(L, g);
          if (g.essential_dimension() > n) {
            *why = "dimension grew to " + std::to_string(g.essential_dimension()) +
                   " at k=" + std::to_string(k);
            return false;
          }
        }
        return true;
      });
}

SuiteResult run_translation_identity_suite(const SuiteOptions& options) {
  return run_suite(
      "cylinder_translation_identity", options,
      [](DeterministicRng& rng, std::string* why) {
        Series f = random_polynomial(rng);
        int n = f.essential_dimension();
        // xi vanishes on the first n coordinates, so it translates only
        // variables f never uses.
        TranslationVector xi;
        xi.xi.assign(n, Complex(0.0, 0.0));
        int extra = rng.uniform_int(1, 3);
        for (int j = 0; j < extra; ++j) xi.xi.push_back(rng.unit_square());
        if (!(translate(f, xi) == f)) {
          *why = "translation beyond cylinder " + std::to_string(n) + " moved f";
          return false;
        }
        return true;
      });
}

SuiteResult run_convolution_commutation_suite(const SuiteOptions& options) {
  return run_suite(
      "translation_commutation", options, [](DeterministicRng& rng, std::string* why) {
        ConvolutionSymbol L = random_symbol(rng);
        Series f = random_polynomial(rng);
        TranslationVector xi = random_translation(rng);
        double distance = coefficient_table_distance(apply(L, translate(f, xi)),
                                                     translate(apply(L, f), xi));
        if (!(distance <= 1e-9)) {
          *why = "commutator distance " + std::to_string(distance);
          return false;
        }
        return true;
      });
}

SuiteResult run_triviality_suite(const SuiteOptions& options) {
  return run_suite(
      "triviality_restriction", options, [](DeterministicRng& rng, std::string* why) {
        ConvolutionSymbol L = random_symbol(rng);
        if (rng.uniform() < 0.3) {
          L = ConvolutionSymbol::identity(rng.unit_square());  // force trivial cases
        }
        // The equivalence quantifies over every n: a single small-n
        // restriction may collapse to the zero operator without making L
        // trivial.
        bool all_trivial = true;
        for (int n = 1; n <= L.variable_span() + 1; ++n) {
          ConvolutionSymbol Ln = associated_operator(L, CylinderIndex(n));
          all_trivial = all_trivial && Ln.is_trivial();
          if (L.is_trivial() && !Ln.is_trivial()) {
            *why = "trivial operator became nontrivial at n=" + std::to_string(n);
            return false;
          }
        }
        if (all_trivial != L.is_trivial()) {
          *why = "triviality equivalence over all n failed";
          return false;
        }
        return true;
      });
}

std::vector<SuiteResult> run_all_suites(const SuiteOptions& options) {
  return {
      run_restriction_identity_suite(options),
      run_factorization_suite(options),
      run_power_factorization_suite(options),
      run_confinement_suite(options),
      run_translation_identity_suite(options),
      run_convolution_commutation_suite(options),
      run_triviality_suite(options),
  };
}

}  // namespace holodyn
