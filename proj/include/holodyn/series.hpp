// Copyright (c) the holodyn developers
// SPDX-License-Identifier: Apache-2.0

#ifndef HOLODYN_SERIES_HPP_
#define HOLODYN_SERIES_HPP_

#include <complex>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "holodyn/multi_index.hpp"

namespace holodyn {

using Complex = std::complex<double>;

/// Radius of the closed polydisc {|z_j| <= r for all j}. Polydiscs are the
/// fundamental family of compact sets used by every seminorm here.
struct Radius {
  double value;

  explicit Radius(double r);
};

/// Tail bound metadata for the unstored part of an entire function beyond the
/// truncation degree. |tail(z)| <= scale * sum of the closed-form terms on the
/// polydisc of radius r. Operations that cannot propagate a sound bound drop
/// the descriptor instead of guessing.
struct ExponentialTail {
  std::vector<Complex> lambda;  // e_lambda direction
  int from_degree = 0;          // tail covers total degree > from_degree
  double scale = 1.0;

  bool same_shape(const ExponentialTail& other) const;
};

struct GapTail {
  int variable = 1;
  std::vector<int> blocks;  // strictly increasing exponents
  int from_degree = 0;      // blocks > from_degree are unstored
  double scale = 1.0;

  bool same_shape(const GapTail& other) const;
};

using TailDescriptor = std::variant<ExponentialTail, GapTail>;

/// Monotone non-decreasing in r, always >= 0.
double tail_bound(const TailDescriptor& tail, double r);

/// Remainder of the exponential series: sum_{m > degree} s^m / m!, computed
/// directly from the first omitted term (never as exp(s) minus a partial sum,
/// which cancels catastrophically for large degree).
double exp_series_remainder(double s, int degree);

/// Sparse coefficient table of a polynomial truncation of an entire function
/// in countably many complex variables. Every stored coefficient is nonzero,
/// every term degree is <= truncation_degree, and the essential dimension
/// (largest variable index that occurs) is finite by construction.
///
/// Values are immutable after construction; all operations are pure.
class Series {
 public:
  using TermMap = std::map<MultiIndex, Complex>;

  Series() = default;  // zero series, truncation degree 0

  static Series zero(int truncation_degree = 0);
  static Series constant(Complex c);
  static Series monomial(const MultiIndex& alpha, Complex c);
  static Series variable(int j);  // z_j

  /// Validating constructor: drops exact zeros; throws InvalidArgument when a
  /// term degree exceeds the truncation degree or the degree is negative.
  static Series from_terms(TermMap terms, int truncation_degree,
                           std::optional<TailDescriptor> tail = std::nullopt);

  const TermMap& terms() const noexcept { return terms_; }
  int truncation_degree() const noexcept { return truncation_degree_; }
  const std::optional<TailDescriptor>& tail() const noexcept { return tail_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Coefficient a_alpha (exact 0 when absent).
  Complex coefficient(const MultiIndex& alpha) const;

  /// Largest degree among stored terms (0 for the zero series).
  int degree() const noexcept;

  /// Largest variable index over all supports; 0 for constants.
  int essential_dimension() const noexcept;

  /// Copy without terms of magnitude <= tolerance. tolerance = 0 keeps the
  /// table exact and only removes true zeros.
  Series pruned(double tolerance) const;

  /// Copy with the tail descriptor removed.
  Series without_tail() const;

  bool operator==(const Series& other) const;

 private:
  TermMap terms_;
  int truncation_degree_ = 0;
  std::optional<TailDescriptor> tail_;
};

/// sum_i a_i * f_i. Truncation degree is the max over inputs; the tail
/// descriptor survives only when all inputs carry the same descriptor shape
/// (then scales combine as sum |a_i| * scale_i, which stays an upper bound).
/// Throws InvalidArgument on an empty list.
Series linear_combine(const std::vector<std::pair<Complex, Series>>& pairs);

Series multiply(const Series& f, const Series& g);

/// Pointwise value; coordinates beyond the supplied point are treated as 0.
Complex evaluate(const Series& f, const std::vector<Complex>& point);

/// d/dz_j, exact on the stored polynomial. Coefficient updates are single
/// multiplications by the integer exponent (never factorial quotients).
Series partial_derivative(const Series& f, int variable);

/// Majorant seminorm p_r(f) = sum |a_alpha| r^deg(alpha); an upper bound for
/// the sup norm over the closed polydisc of radius r. With include_tail the
/// descriptor bound is added (TailUnavailable when there is none).
double majorant_seminorm(const Series& f, Radius r, bool include_tail = false);

/// Lower companion to the majorant: max |f| over the lattice of points
/// r * (w^k1, ..., w^kn) with w a primitive samples_per_axis-th root of
/// unity and n the essential dimension.
double grid_sup_estimate(const Series& f, Radius r, int samples_per_axis);

/// Truncated exponential e_lambda(z) = exp(lambda . z): coefficients
/// lambda^alpha / alpha! for degree <= truncation_degree, with an exact
/// exponential tail descriptor.
Series exp_function(const std::vector<Complex>& lambda, int truncation_degree);

/// Lacunary series sum_i z_j^{m_i} / m_i! over strictly increasing blocks.
/// Coefficients come from -lgamma in log space. Throws BlockTooLarge when the
/// top block exceeds 170 (1/m! stops being representable in double).
Series gap_series(const std::vector<int>& blocks, int variable);

inline constexpr int kMaxGapBlock = 170;

/// Convenience blocks 2^0, 2^1, ..., 2^max_power.
std::vector<int> default_gap_blocks(int max_power = 7);

// Arithmetic sugar over linear_combine / multiply.
Series operator+(const Series& f, const Series& g);
Series operator-(const Series& f, const Series& g);
Series operator*(Complex a, const Series& f);
Series operator*(const Series& f, const Series& g);

/// Max absolute coefficient difference over the union of supports, divided by
/// max(1, largest coefficient magnitude). Used by the floating-path identity
/// checks.
double coefficient_table_distance(const Series& f, const Series& g);

}  // namespace holodyn

#endif  // HOLODYN_SERIES_HPP_
