// Copyright (c) the holodyn developers
// SPDX-License-Identifier: Apache-2.0

#include "holodyn/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "holodyn/errors.hpp"

namespace holodyn {

ConvolutionSymbol ConvolutionSymbol::from_coefficients(CoefficientMap coefficients,
                                                       std::string label) {
  for (auto it = coefficients.begin(); it != coefficients.end();) {
    if (it->second == Complex(0.0, 0.0)) {
      it = coefficients.erase(it);
    } else {
      ++it;
    }
  }
  ConvolutionSymbol s;
  s.coefficients_ = std::move(coefficients);
  s.label_ = std::move(label);
  return s;
}

ConvolutionSymbol ConvolutionSymbol::identity(Complex scale) {
  CoefficientMap c;
  c.emplace(MultiIndex{}, scale);
  return from_coefficients(std::move(c), "id");
}

ConvolutionSymbol ConvolutionSymbol::derivative(int variable) {
  CoefficientMap c;
  c.emplace(MultiIndex::unit(variable), Complex(1.0, 0.0));
  return from_coefficients(std::move(c), "d" + std::to_string(variable));
}

ConvolutionSymbol ConvolutionSymbol::from_series_coefficients(const Series& f,
                                                              std::string label) {
  return from_coefficients(f.terms(), std::move(label));
}

ConvolutionSymbol ConvolutionSymbol::with_label(std::string label) const {
  ConvolutionSymbol s = *this;
  s.label_ = std::move(label);
  return s;
}

Complex ConvolutionSymbol::coefficient(const MultiIndex& beta) const {
  auto it = coefficients_.find(beta);
  return it == coefficients_.end() ? Complex(0.0, 0.0) : it->second;
}

int ConvolutionSymbol::order() const noexcept {
  int d = 0;
  for (const auto& [beta, c] : coefficients_) d = std::max(d, beta.degree());
  return d;
}

int ConvolutionSymbol::variable_span() const noexcept {
  int n = 0;
  for (const auto& [beta, c] : coefficients_) n = std::max(n, beta.max_variable());
  return n;
}

bool ConvolutionSymbol::is_trivial() const noexcept {
  for (const auto& [beta, c] : coefficients_) {
    if (!beta.empty()) return false;
  }
  return true;
}

bool ConvolutionSymbol::operator==(const ConvolutionSymbol& other) const {
  return coefficients_ == other.coefficients_;
}

Series apply(const ConvolutionSymbol& L, const Series& f) {
  Series::TermMap out;
  for (const auto& [beta, c] : L.coefficients()) {
    for (const auto& [alpha, a] : f.terms()) {
      if (!alpha.contains(beta)) continue;
      // d^beta z^alpha = (falling factorial) z^{alpha-beta}; the factor is
      // accumulated as single integer multiplications in a fixed order.
      Complex v = a;
      for (const auto& [var, exp] : beta.entries()) {
        int base = alpha.exponent(var);
        for (int t = 0; t < exp; ++t) v *= static_cast<double>(base - t);
      }
      out[*alpha.minus(beta)] += c * v;
    }
  }
  int degree = std::max(0, f.truncation_degree());

  std::optional<TailDescriptor> tail;
  if (f.tail()) {
    if (const auto* e = std::get_if<ExponentialTail>(&*f.tail())) {
      // The unstored part is a scaled exponential tail; d^beta scales it by
      // lambda^beta, so the symbol action inflates the scale by
      // sum |c_beta| |lambda|^beta and shifts the covered degree down.
      double factor = 0.0;
      for (const auto& [beta, c] : L.coefficients()) {
        double p = std::abs(c);
        for (const auto& [var, exp] : beta.entries()) {
          Complex lj = var <= static_cast<int>(e->lambda.size())
                           ? e->lambda[var - 1]
                           : Complex(0.0, 0.0);
          p *= std::pow(std::abs(lj), exp);
        }
        factor += p;
      }
      ExponentialTail t = *e;
      t.from_degree = std::max(0, e->from_degree - L.order());
      t.scale = e->scale * factor;
      tail = t;
    } else if (L.coefficients().size() == 1) {
      const auto& [beta, c] = *L.coefficients().begin();
      const auto& g = std::get<GapTail>(*f.tail());
      bool pure_power = beta.empty() || (beta.entries().size() == 1 &&
                                         beta.entries().front().first == g.variable);
      if (pure_power) {
        int k = beta.degree();
        GapTail t = g;
        t.from_degree = std::max(0, g.from_degree - k);
        t.scale = g.scale * std::abs(c);
        t.blocks.clear();
        for (int m : g.blocks) {
          if (m - k >= 1) t.blocks.push_back(m - k);
        }
        tail = t;
      }
    }
  }
  return Series::from_terms(std::move(out), degree, std::move(tail));
}

Series iterate_apply(const ConvolutionSymbol& L, const Series& f, int k) {
  if (k < 0) {
    throw Error(ErrorCode::InvalidArgument, "iteration count must be >= 0");
  }
  Series g = f;
  for (int i = 0; i < k; ++i) g = apply(L, g);
  return g;
}

namespace {

// Exact while everything stays under 2^53: each intermediate value is itself
// a binomial coefficient, so the divisions are exact.
double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return c;
}

void binomial_shift(const std::vector<MultiIndex::Entry>& entries, std::size_t idx,
                    const std::vector<Complex>& xi, MultiIndex target, Complex coeff,
                    Series::TermMap& out) {
  if (idx == entries.size()) {
    out[std::move(target)] += coeff;
    return;
  }
  const auto& [var, exp] = entries[idx];
  Complex neg_xi = var <= static_cast<int>(xi.size()) ? -xi[var - 1] : Complex(0.0, 0.0);
  // (z - xi)^exp expanded from the z^exp end so the xi = 0 case costs nothing.
  binomial_shift(entries, idx + 1, xi, target.with_increment(var, exp), coeff, out);
  if (neg_xi == Complex(0.0, 0.0)) return;
  Complex power(1.0, 0.0);
  for (int t = exp - 1; t >= 0; --t) {
    power *= neg_xi;
    Complex c = coeff * binomial(exp, t) * power;
    binomial_shift(entries, idx + 1, xi, t > 0 ? target.with_increment(var, t) : target,
                   c, out);
  }
}

}  // namespace

Series translate(const Series& f, const TranslationVector& xi) {
  Series::TermMap out;
  for (const auto& [alpha, a] : f.terms()) {
    binomial_shift(alpha.entries(), 0, xi.xi, MultiIndex{}, a, out);
  }
  return Series::from_terms(std::move(out), f.truncation_degree());
}

ConvolutionSymbol translation_expansion(const TranslationVector& xi, int cutoff) {
  if (cutoff < 0) {
    throw Error(ErrorCode::InvalidArgument, "translation cutoff must be >= 0");
  }
  std::vector<Complex> neg(xi.xi.size());
  for (std::size_t j = 0; j < xi.xi.size(); ++j) neg[j] = -xi.xi[j];
  Series table = exp_function(neg, cutoff);
  std::ostringstream label;
  label << "tau[";
  for (std::size_t j = 0; j < xi.xi.size(); ++j) {
    if (j) label << ",";
    label << xi.xi[j].real();
    if (xi.xi[j].imag() != 0.0) label << (xi.xi[j].imag() < 0 ? "" : "+")
                                      << xi.xi[j].imag() << "i";
  }
  label << "]@" << cutoff;
  return ConvolutionSymbol::from_series_coefficients(table, label.str());
}

ConvolutionSymbol associated_operator(const ConvolutionSymbol& L, CylinderIndex n) {
  ConvolutionSymbol::CoefficientMap kept;
  for (const auto& [beta, c] : L.coefficients()) {
    if (beta.max_variable() <= n.n) kept.emplace(beta, c);
  }
  return ConvolutionSymbol::from_coefficients(
      std::move(kept), L.label().empty()
                           ? "associated_" + std::to_string(n.n)
                           : L.label() + "_" + std::to_string(n.n));
}

Complex symbol_value(const ConvolutionSymbol& L, const std::vector<Complex>& lambda) {
  std::map<int, std::vector<Complex>> powers;
  for (const auto& [beta, c] : L.coefficients()) {
    for (const auto& [var, exp] : beta.entries()) {
      auto& p = powers[var];
      if (static_cast<int>(p.size()) >= exp) continue;
      Complex z = var <= static_cast<int>(lambda.size()) ? lambda[var - 1]
                                                         : Complex(0.0, 0.0);
      if (p.empty()) p.push_back(z);
      while (static_cast<int>(p.size()) < exp) p.push_back(p.back() * z);
    }
  }
  Complex sum(0.0, 0.0);
  for (const auto& [beta, c] : L.coefficients()) {
    Complex prod = c;
    for (const auto& [var, exp] : beta.entries()) prod *= powers[var][exp - 1];
    sum += prod;
  }
  return sum;
}

double eigen_consistency_bound(const ConvolutionSymbol& L,
                               const std::vector<Complex>& lambda,
                               int truncation_degree, Radius r) {
  if (truncation_degree < 0) {
    throw Error(ErrorCode::InvalidArgument, "truncation degree must be >= 0");
  }
  double s = 0.0;
  for (const Complex& l : lambda) s += std::abs(l);
  s *= r.value;
  if (s == 0.0) return 0.0;

  // L E_D - phi E_D = -sum_beta c_beta lambda^beta (E_D - E_{D-|beta|}), so
  // each symbol term contributes the band of exponential-series terms with
  // degree in (D - |beta|, D].
  const double tail_at_D = exp_series_remainder(s, truncation_degree);
  double bound = 0.0;
  for (const auto& [beta, c] : L.coefficients()) {
    double p = std::abs(c);
    for (const auto& [var, exp] : beta.entries()) {
      Complex lj = var <= static_cast<int>(lambda.size()) ? lambda[var - 1]
                                                          : Complex(0.0, 0.0);
      p *= std::pow(std::abs(lj), exp);
    }
    if (p == 0.0) continue;
    int k = truncation_degree - beta.degree();
    double band = (k >= -1 ? exp_series_remainder(s, k) : std::exp(s)) - tail_at_D;
    bound += p * std::max(0.0, band);
  }
  return bound;
}

namespace {

constexpr double kGolden = 0.6180339887498949;  // 1/phi

double ray_value(const ConvolutionSymbol& L, const std::vector<Complex>& u, double t,
                 std::vector<Complex>& scratch) {
  for (std::size_t j = 0; j < u.size(); ++j) scratch[j] = t * u[j];
  return std::abs(symbol_value(L, scratch));
}

// Golden-section search for the extremum of |phi| along the ray, minimizing
// when `minimize`, else maximizing.
double golden_refine(const ConvolutionSymbol& L, const std::vector<Complex>& u,
                     double lo, double hi, int steps, bool minimize, double* best_t,
                     std::vector<Complex>& scratch) {
  double a = lo, b = hi;
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = ray_value(L, u, x1, scratch);
  double f2 = ray_value(L, u, x2, scratch);
  for (int i = 0; i < steps; ++i) {
    bool keep_left = minimize ? (f1 < f2) : (f1 > f2);
    if (keep_left) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = ray_value(L, u, x1, scratch);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = ray_value(L, u, x2, scratch);
    }
  }
  double mid = 0.5 * (a + b);
  double fm = ray_value(L, u, mid, scratch);
  *best_t = mid;
  return fm;
}

std::vector<Complex> ray_direction(int ray, int rays, int dims) {
  std::vector<Complex> u(dims);
  if (dims == 1) {
    double angle = 2.0 * M_PI * static_cast<double>(ray) / rays;
    u[0] = Complex(std::cos(angle), std::sin(angle));
    return u;
  }
  if (ray == 0) {
    std::fill(u.begin(), u.end(), Complex(1.0, 0.0));
    return u;
  }
  if (ray == 1) {
    std::fill(u.begin(), u.end(), Complex(-1.0, 0.0));
    return u;
  }
  // Deterministic Richtmyer-style lattice on the torus of phases.
  static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (int j = 0; j < dims; ++j) {
    double alpha = std::sqrt(static_cast<double>(primes[j % 12])) + j / 12;
    alpha -= std::floor(alpha);
    double phase = (ray - 1) * alpha;
    phase -= std::floor(phase);
    double angle = 2.0 * M_PI * phase;
    u[j] = Complex(std::cos(angle), std::sin(angle));
  }
  return u;
}

std::string format_lambda(const std::vector<Complex>& lambda) {
  std::ostringstream os;
  os << "(";
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    if (j) os << ", ";
    os << lambda[j].real();
    if (lambda[j].imag() != 0.0) os << (lambda[j].imag() < 0 ? "" : "+")
                                    << lambda[j].imag() << "i";
  }
  os << ")";
  return os.str();
}

}  // namespace

DichotomyResult find_dichotomy_points(const ConvolutionSymbol& L,
                                      const DichotomySearchParams& params) {
  if (L.is_trivial()) {
    throw Error(ErrorCode::TrivialOperator,
                "the spectral dichotomy needs a nontrivial symbol");
  }
  if (params.rays < 1 || params.coarse_samples < 2 || !(params.t_max > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "bad dichotomy search budget");
  }
  int dims = params.dimensions > 0 ? params.dimensions
                                   : std::max(1, L.variable_span());

  DichotomyResult result;
  result.log.push_back("dichotomy search: rays=" + std::to_string(params.rays) +
                       " t_max=" + std::to_string(params.t_max) +
                       " coarse=" + std::to_string(params.coarse_samples) +
                       " refine=" + std::to_string(params.refine_steps) +
                       " dims=" + std::to_string(dims));

  double best_small = std::numeric_limits<double>::infinity();
  double best_big = -1.0;
  int small_ray = -1, big_ray = -1;
  double small_t = 0.0, big_t = 0.0;
  std::vector<Complex> scratch(dims);

  std::vector<std::vector<Complex>> directions;
  directions.reserve(params.rays);
  for (int ray = 0; ray < params.rays; ++ray) {
    directions.push_back(ray_direction(ray, params.rays, dims));
  }

  const double dt = params.t_max / params.coarse_samples;
  for (int ray = 0; ray < params.rays; ++ray) {
    double ray_min = std::numeric_limits<double>::infinity(), ray_min_t = 0.0;
    double ray_max = -1.0, ray_max_t = 0.0;
    for (int i = 0; i <= params.coarse_samples; ++i) {
      double t = dt * i;
      double v = ray_value(L, directions[ray], t, scratch);
      if (v < ray_min) {
        ray_min = v;
        ray_min_t = t;
      }
      if (v > ray_max) {
        ray_max = v;
        ray_max_t = t;
      }
    }
    result.log.push_back("ray " + std::to_string(ray) + ": min |phi|=" +
                         std::to_string(ray_min) + " at t=" + std::to_string(ray_min_t) +
                         ", max |phi|=" + std::to_string(ray_max) +
                         " at t=" + std::to_string(ray_max_t));
    if (ray_min < best_small) {
      best_small = ray_min;
      small_ray = ray;
      small_t = ray_min_t;
    }
    if (ray_max > best_big) {
      best_big = ray_max;
      big_ray = ray;
      big_t = ray_max_t;
    }
  }

  // Refinement around the best coarse samples, bracketed by their neighbors.
  auto refine = [&](int ray, double t, bool minimize, double coarse_value) {
    double lo = std::max(0.0, t - dt);
    double hi = std::min(params.t_max, t + dt);
    double refined_t = t;
    double v = golden_refine(L, directions[ray], lo, hi, params.refine_steps, minimize,
                             &refined_t, scratch);
    bool better = minimize ? (v < coarse_value) : (v > coarse_value);
    if (!better) {
      refined_t = t;
      v = coarse_value;
    }
    return std::pair<double, double>(v, refined_t);
  };
  auto [small_v, small_rt] = refine(small_ray, small_t, true, best_small);
  auto [big_v, big_rt] = refine(big_ray, big_t, false, best_big);

  for (int j = 0; j < dims; ++j) {
    result.lambda_small.push_back(small_rt * directions[small_ray][j]);
    result.lambda_big.push_back(big_rt * directions[big_ray][j]);
  }
  result.small_value = small_v;
  result.big_value = big_v;
  result.found = small_v < 1.0 && big_v > 1.0;
  result.log.push_back(std::string("verdict: ") + (result.found ? "found" : "NotFound") +
                       " |phi(small)|=" + std::to_string(small_v) + " at " +
                       format_lambda(result.lambda_small) + ", |phi(big)|=" +
                       std::to_string(big_v) + " at " + format_lambda(result.lambda_big));
  return result;
}

}  // namespace holodyn
