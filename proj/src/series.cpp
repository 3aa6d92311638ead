// Copyright (c) the holodyn developers
// SPDX-License-Identifier: Apache-2.0

#include "holodyn/series.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "holodyn/errors.hpp"

namespace holodyn {

Radius::Radius(double r) : value(r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw Error(ErrorCode::InvalidArgument, "polydisc radius must be finite and > 0");
  }
}

bool ExponentialTail::same_shape(const ExponentialTail& other) const {
  return lambda == other.lambda && from_degree == other.from_degree;
}

bool GapTail::same_shape(const GapTail& other) const {
  return variable == other.variable && blocks == other.blocks &&
         from_degree == other.from_degree;
}

double exp_series_remainder(double s, int degree) {
  if (s <= 0.0) return 0.0;
  // First omitted term s^(D+1)/(D+1)! in log space, then a multiplicative
  // sweep. Terms grow until m ~ s, so the iteration cap scales with s.
  int m = degree + 1;
  double term = std::exp(static_cast<double>(m) * std::log(s) - std::lgamma(m + 1.0));
  double sum = term;
  const int max_iter = 1000 + 3 * static_cast<int>(s);
  for (int it = 0; it < max_iter; ++it) {
    ++m;
    term *= s / static_cast<double>(m);
    sum += term;
    if (term <= sum * 1e-18) break;
  }
  return sum;
}

double tail_bound(const TailDescriptor& tail, double r) {
  if (const auto* e = std::get_if<ExponentialTail>(&tail)) {
    double s = 0.0;
    for (const Complex& l : e->lambda) s += std::abs(l);
    return e->scale * exp_series_remainder(r * s, e->from_degree);
  }
  const auto& g = std::get<GapTail>(tail);
  double sum = 0.0;
  for (int m : g.blocks) {
    if (m > g.from_degree) {
      sum += std::exp(static_cast<double>(m) * std::log(r) - std::lgamma(m + 1.0));
    }
  }
  return g.scale * sum;
}

Series Series::zero(int truncation_degree) {
  return from_terms({}, truncation_degree);
}

Series Series::constant(Complex c) {
  TermMap terms;
  if (c != Complex(0.0, 0.0)) terms.emplace(MultiIndex{}, c);
  return from_terms(std::move(terms), 0);
}

Series Series::monomial(const MultiIndex& alpha, Complex c) {
  TermMap terms;
  if (c != Complex(0.0, 0.0)) terms.emplace(alpha, c);
  return from_terms(std::move(terms), alpha.degree());
}

Series Series::variable(int j) {
  return monomial(MultiIndex::unit(j), Complex(1.0, 0.0));
}

Series Series::from_terms(TermMap terms, int truncation_degree,
                          std::optional<TailDescriptor> tail) {
  if (truncation_degree < 0) {
    throw Error(ErrorCode::InvalidArgument, "truncation degree must be >= 0");
  }
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second == Complex(0.0, 0.0)) {
      it = terms.erase(it);
    } else {
      if (it->first.degree() > truncation_degree) {
        throw Error(ErrorCode::InvalidArgument,
                    "term degree exceeds truncation degree: " + it->first.to_string());
      }
      ++it;
    }
  }
  Series s;
  s.terms_ = std::move(terms);
  s.truncation_degree_ = truncation_degree;
  s.tail_ = std::move(tail);
  return s;
}

Complex Series::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

int Series::degree() const noexcept {
  int d = 0;
  for (const auto& [alpha, c] : terms_) d = std::max(d, alpha.degree());
  return d;
}

int Series::essential_dimension() const noexcept {
  int n = 0;
  for (const auto& [alpha, c] : terms_) n = std::max(n, alpha.max_variable());
  return n;
}

Series Series::pruned(double tolerance) const {
  if (tolerance < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "prune tolerance must be >= 0");
  }
  TermMap kept;
  for (const auto& [alpha, c] : terms_) {
    if (std::abs(c) > tolerance) kept.emplace(alpha, c);
  }
  return from_terms(std::move(kept), truncation_degree_, tail_);
}

Series Series::without_tail() const {
  return from_terms(terms_, truncation_degree_, std::nullopt);
}

bool Series::operator==(const Series& other) const {
  return terms_ == other.terms_ && truncation_degree_ == other.truncation_degree_;
}

namespace {

std::optional<TailDescriptor> combine_tails(
    const std::vector<std::pair<Complex, Series>>& pairs) {
  const auto& first = pairs.front().second.tail();
  if (!first) return std::nullopt;
  double scale = 0.0;
  for (const auto& [a, f] : pairs) {
    const auto& t = f.tail();
    if (!t || t->index() != first->index()) return std::nullopt;
    bool shape_ok = std::visit(
        [&](const auto& lhs) {
          using T = std::decay_t<decltype(lhs)>;
          return lhs.same_shape(std::get<T>(*first));
        },
        *t);
    if (!shape_ok) return std::nullopt;
    double s = std::visit([](const auto& d) { return d.scale; }, *t);
    scale += std::abs(a) * s;
  }
  TailDescriptor combined = *first;
  std::visit([&](auto& d) { d.scale = scale; }, combined);
  return combined;
}

}  // namespace

Series linear_combine(const std::vector<std::pair<Complex, Series>>& pairs) {
  if (pairs.empty()) {
    throw Error(ErrorCode::InvalidArgument, "linear_combine needs at least one input");
  }
  Series::TermMap out;
  int degree = 0;
  for (const auto& [a, f] : pairs) {
    degree = std::max(degree, f.truncation_degree());
    if (a == Complex(0.0, 0.0)) continue;
    for (const auto& [alpha, c] : f.terms()) out[alpha] += a * c;
  }
  return Series::from_terms(std::move(out), degree, combine_tails(pairs));
}

Series multiply(const Series& f, const Series& g) {
  Series::TermMap out;
  for (const auto& [alpha, a] : f.terms()) {
    for (const auto& [beta, b] : g.terms()) {
      out[alpha.plus(beta)] += a * b;
    }
  }
  return Series::from_terms(std::move(out), f.truncation_degree() + g.truncation_degree());
}

Complex evaluate(const Series& f, const std::vector<Complex>& point) {
  // Memoized coordinate powers: powers[j] holds z_j^1 .. z_j^{max exponent}.
  std::map<int, std::vector<Complex>> powers;
  for (const auto& [alpha, c] : f.terms()) {
    for (const auto& [var, exp] : alpha.entries()) {
      auto& p = powers[var];
      if (static_cast<int>(p.size()) >= exp) continue;
      Complex z = var <= static_cast<int>(point.size()) ? point[var - 1] : Complex(0.0, 0.0);
      if (p.empty()) p.push_back(z);
      while (static_cast<int>(p.size()) < exp) p.push_back(p.back() * z);
    }
  }
  Complex sum(0.0, 0.0);
  for (const auto& [alpha, c] : f.terms()) {
    Complex prod = c;
    for (const auto& [var, exp] : alpha.entries()) {
      prod *= powers[var][exp - 1];
    }
    sum += prod;
  }
  return sum;
}

Series partial_derivative(const Series& f, int variable) {
  if (variable < 1) {
    throw Error(ErrorCode::InvalidArgument, "variable index must be >= 1");
  }
  Series::TermMap out;
  for (const auto& [alpha, c] : f.terms()) {
    int exp = alpha.exponent(variable);
    if (exp == 0) continue;
    out.emplace(alpha.with_increment(variable, -1), c * static_cast<double>(exp));
  }
  int degree = std::max(0, f.truncation_degree() - 1);

  std::optional<TailDescriptor> tail;
  if (f.tail()) {
    if (const auto* e = std::get_if<ExponentialTail>(&*f.tail())) {
      // d/dz_j of scale * e_lambda is (scale * |lambda_j|)-bounded with the
      // truncation shifted down by one; exact, not just conservative.
      Complex lj = variable <= static_cast<int>(e->lambda.size())
                       ? e->lambda[variable - 1]
                       : Complex(0.0, 0.0);
      ExponentialTail t = *e;
      t.from_degree = std::max(0, e->from_degree - 1);
      t.scale = e->scale * std::abs(lj);
      tail = t;
    } else {
      const auto& g = std::get<GapTail>(*f.tail());
      GapTail t = g;
      t.from_degree = std::max(0, g.from_degree - 1);
      t.blocks.clear();
      if (g.variable == variable) {
        for (int m : g.blocks) {
          if (m - 1 >= 1) t.blocks.push_back(m - 1);
        }
      } else {
        t.scale = 0.0;
      }
      tail = t;
    }
  }
  return Series::from_terms(std::move(out), degree, std::move(tail));
}

double majorant_seminorm(const Series& f, Radius r, bool include_tail) {
  double sum = 0.0;
  for (const auto& [alpha, c] : f.terms()) {
    sum += std::abs(c) * std::pow(r.value, static_cast<double>(alpha.degree()));
  }
  if (include_tail) {
    if (!f.tail()) {
      throw Error(ErrorCode::TailUnavailable, "series carries no tail descriptor");
    }
    sum += tail_bound(*f.tail(), r.value);
  }
  return sum;
}

double grid_sup_estimate(const Series& f, Radius r, int samples_per_axis) {
  if (samples_per_axis < 1) {
    throw Error(ErrorCode::InvalidArgument, "samples_per_axis must be >= 1");
  }
  int n = f.essential_dimension();
  if (n == 0) return std::abs(evaluate(f, {}));

  std::vector<Complex> roots(samples_per_axis);
  for (int k = 0; k < samples_per_axis; ++k) {
    double angle = 2.0 * M_PI * static_cast<double>(k) / samples_per_axis;
    roots[k] = r.value * Complex(std::cos(angle), std::sin(angle));
  }
  std::vector<int> digits(n, 0);
  std::vector<Complex> point(n);
  double best = 0.0;
  while (true) {
    for (int j = 0; j < n; ++j) point[j] = roots[digits[j]];
    best = std::max(best, std::abs(evaluate(f, point)));
    int j = 0;
    while (j < n && ++digits[j] == samples_per_axis) digits[j++] = 0;
    if (j == n) break;
  }
  return best;
}

namespace {

// Shared enumeration for exponential-type coefficient tables lambda^alpha /
// alpha!. Exponents are assigned variable by variable in ascending order with
// an incrementally updated coefficient, so a run over a truncated lambda
// reproduces bit-identical coefficients for the surviving indices.
void exponential_terms(const std::vector<std::pair<int, Complex>>& support,
                       std::size_t idx, int remaining_degree, MultiIndex alpha,
                       Complex coeff, Series::TermMap& out) {
  if (idx == support.size()) {
    if (coeff != Complex(0.0, 0.0)) out.emplace(std::move(alpha), coeff);
    return;
  }
  const auto& [var, l] = support[idx];
  exponential_terms(support, idx + 1, remaining_degree, alpha, coeff, out);
  Complex c = coeff;
  for (int e = 1; e <= remaining_degree; ++e) {
    c = c * l / static_cast<double>(e);
    exponential_terms(support, idx + 1, remaining_degree - e,
                      alpha.with_increment(var, e), c, out);
  }
}

}  // namespace

Series exp_function(const std::vector<Complex>& lambda, int truncation_degree) {
  if (truncation_degree < 0) {
    throw Error(ErrorCode::InvalidArgument, "truncation degree must be >= 0");
  }
  std::vector<std::pair<int, Complex>> support;
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    if (lambda[j] != Complex(0.0, 0.0)) support.emplace_back(static_cast<int>(j + 1), lambda[j]);
  }
  Series::TermMap terms;
  exponential_terms(support, 0, truncation_degree, MultiIndex{}, Complex(1.0, 0.0), terms);
  ExponentialTail tail{lambda, truncation_degree, 1.0};
  return Series::from_terms(std::move(terms), truncation_degree, TailDescriptor(tail));
}

Series gap_series(const std::vector<int>& blocks, int variable) {
  if (variable < 1) {
    throw Error(ErrorCode::InvalidArgument, "variable index must be >= 1");
  }
  if (blocks.empty()) {
    throw Error(ErrorCode::InvalidArgument, "block list must be non-empty");
  }
  int prev = 0;
  for (int m : blocks) {
    if (m <= prev) {
      throw Error(ErrorCode::InvalidArgument, "blocks must be strictly increasing and >= 1");
    }
    prev = m;
  }
  if (blocks.back() > kMaxGapBlock) {
    throw Error(ErrorCode::BlockTooLarge,
                "top block " + std::to_string(blocks.back()) + " exceeds " +
                    std::to_string(kMaxGapBlock) + " (1/m! not representable)");
  }
  Series::TermMap terms;
  for (int m : blocks) {
    double c = std::exp(-std::lgamma(m + 1.0));
    terms.emplace(MultiIndex::from_pairs({{variable, m}}), Complex(c, 0.0));
  }
  GapTail tail{variable, blocks, blocks.back(), 1.0};
  return Series::from_terms(std::move(terms), blocks.back(), TailDescriptor(tail));
}

std::vector<int> default_gap_blocks(int max_power) {
  std::vector<int> blocks;
  for (int i = 0; i <= max_power; ++i) blocks.push_back(1 << i);
  return blocks;
}

Series operator+(const Series& f, const Series& g) {
  return linear_combine({{Complex(1.0, 0.0), f}, {Complex(1.0, 0.0), g}});
}

Series operator-(const Series& f, const Series& g) {
  return linear_combine({{Complex(1.0, 0.0), f}, {Complex(-1.0, 0.0), g}});
}

Series operator*(Complex a, const Series& f) {
  return linear_combine({{a, f}});
}

Series operator*(const Series& f, const Series& g) { return multiply(f, g); }

double coefficient_table_distance(const Series& f, const Series& g) {
  double max_diff = 0.0;
  double max_mag = 1.0;
  for (const auto& [alpha, c] : f.terms()) {
    max_diff = std::max(max_diff, std::abs(c - g.coefficient(alpha)));
    max_mag = std::max(max_mag, std::abs(c));
  }
  for (const auto& [alpha, c] : g.terms()) {
    max_diff = std::max(max_diff, std::abs(c - f.coefficient(alpha)));
    max_mag = std::max(max_mag, std::abs(c));
  }
  return max_diff / max_mag;
}

}  // namespace holodyn
