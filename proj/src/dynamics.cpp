// Copyright (c) the holodyn developers
// SPDX-License-Identifier: Apache-2.0

#include "holodyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "holodyn/errors.hpp"

namespace holodyn {

namespace {

std::vector<double> radius_values(const std::vector<Radius>& radii) {
  if (radii.empty()) {
    throw Error(ErrorCode::InvalidArgument, "at least one radius is required");
  }
  std::vector<double> out;
  out.reserve(radii.size());
  for (const Radius& r : radii) out.push_back(r.value);
  return out;
}

std::string default_label(const ConvolutionSymbol& L) {
  return L.label().empty() ? "operator" : L.label();
}

}  // namespace

OrbitTrace orbit_trace(const ConvolutionSymbol& L, const Series& f, int horizon,
                       const std::vector<Radius>& radii, int samples_per_axis) {
  if (horizon < 0) {
    throw Error(ErrorCode::InvalidArgument, "horizon must be >= 0");
  }
  OrbitTrace trace;
  trace.operator_label = default_label(L);
  trace.radii = radius_values(radii);
  trace.horizon = horizon;
  trace.samples_per_axis = samples_per_axis;

  Series g = f;
  for (int k = 0; k <= horizon; ++k) {
    if (k > 0) g = apply(L, g);
    OrbitRecord rec;
    rec.k = k;
    rec.eval_at_zero = evaluate(g, {});
    rec.essential_dim = g.essential_dimension();
    for (const Radius& r : radii) {
      rec.majorants.push_back(majorant_seminorm(g, r));
      rec.grid_sups.push_back(grid_sup_estimate(g, r, samples_per_axis));
    }
    trace.records.push_back(std::move(rec));
  }
  return trace;
}

BlackBoxOperator variable_raising_operator() {
  return [](const Series& f) {
    return multiply(Series::variable(f.essential_dimension() + 1), f);
  };
}

namespace {

ConfinementCertificate confinement_from_dims(std::string label, bool symbol_operator,
                                             int horizon, int uniform_bound,
                                             std::vector<int> dims) {
  ConfinementCertificate cert;
  cert.operator_label = std::move(label);
  cert.symbol_operator = symbol_operator;
  cert.horizon = horizon;
  cert.uniform_bound = uniform_bound;
  cert.per_iterate_dim = std::move(dims);
  int running = 0;
  for (int d : cert.per_iterate_dim) {
    running = std::max(running, d);
    cert.per_horizon_bound.push_back(running);
  }
  cert.uniform = cert.per_horizon_bound.empty() ||
                 cert.per_horizon_bound.back() == cert.per_horizon_bound.front();
  return cert;
}

}  // namespace

ConfinementCertificate confinement_certificate(const ConvolutionSymbol& L,
                                               const Series& f, int horizon) {
  if (horizon < 0) {
    throw Error(ErrorCode::InvalidArgument, "horizon must be >= 0");
  }
  std::vector<int> dims;
  Series g = f;
  for (int k = 0; k <= horizon; ++k) {
    if (k > 0) g = apply(L, g);
    dims.push_back(g.essential_dimension());
  }
  return confinement_from_dims(default_label(L), true, horizon,
                               f.essential_dimension(), std::move(dims));
}

ConfinementCertificate confinement_certificate(const BlackBoxOperator& T,
                                               std::string label, const Series& f,
                                               int horizon) {
  if (horizon < 0) {
    throw Error(ErrorCode::InvalidArgument, "horizon must be >= 0");
  }
  std::vector<int> dims;
  Series g = f;
  for (int k = 0; k <= horizon; ++k) {
    if (k > 0) g = T(g);
    dims.push_back(g.essential_dimension());
  }
  int observed = *std::max_element(dims.begin(), dims.end());
  return confinement_from_dims(std::move(label), false, horizon, observed,
                               std::move(dims));
}

NonCyclicityCertificate non_cyclicity_certificate(const ConvolutionSymbol& L,
                                                  const Series& f, int horizon) {
  if (horizon < 0) {
    throw Error(ErrorCode::InvalidArgument, "horizon must be >= 0");
  }
  NonCyclicityCertificate cert;
  cert.operator_label = default_label(L);
  cert.n = f.essential_dimension();
  cert.annihilator_index = MultiIndex::unit(cert.n + 1);
  cert.witness = Series::variable(cert.n + 1);
  cert.horizon_checked = horizon;

  Series g = f;
  for (int k = 0; k <= horizon; ++k) {
    if (k > 0) g = apply(L, g);
    cert.max_abs_functional_on_orbit =
        std::max(cert.max_abs_functional_on_orbit,
                 std::abs(coefficient_functional(g, cert.annihilator_index)));
  }
  cert.functional_on_witness = coefficient_functional(cert.witness, cert.annihilator_index);
  return cert;
}

namespace {

// Exact-zero-pivot elimination: rows that are exact linear combinations of
// earlier rows cancel to true zeros when the arithmetic is exact (integers,
// dyadics); everything else counts as independent. No tolerance by design.
int coefficient_rank(const std::vector<Series>& rows_in) {
  std::vector<MultiIndex> columns;
  for (const Series& f : rows_in) {
    for (const auto& [alpha, c] : f.terms()) columns.push_back(alpha);
  }
  std::sort(columns.begin(), columns.end());
  columns.erase(std::unique(columns.begin(), columns.end()), columns.end());

  std::vector<std::vector<Complex>> rows(rows_in.size(),
                                         std::vector<Complex>(columns.size()));
  for (std::size_t i = 0; i < rows_in.size(); ++i) {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      rows[i][j] = rows_in[i].coefficient(columns[j]);
    }
  }

  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns.size() && row < rows.size(); ++col) {
    std::size_t pivot = row;
    double best = std::abs(rows[row][col]);
    for (std::size_t i = row + 1; i < rows.size(); ++i) {
      double v = std::abs(rows[i][col]);
      if (v > best) {
        best = v;
        pivot = i;
      }
    }
    if (best == 0.0) continue;
    std::swap(rows[row], rows[pivot]);
    for (std::size_t i = row + 1; i < rows.size(); ++i) {
      if (rows[i][col] == Complex(0.0, 0.0)) continue;
      Complex factor = rows[i][col] / rows[row][col];
      for (std::size_t j = col; j < columns.size(); ++j) {
        rows[i][j] -= factor * rows[row][j];
      }
      rows[i][col] = Complex(0.0, 0.0);
    }
    ++rank;
    ++row;
  }
  return rank;
}

}  // namespace

SubspaceConfinementCertificate subspace_orbit_certificate(
    const ConvolutionSymbol& L, const std::vector<Series>& generators, int horizon) {
  if (generators.empty()) {
    throw Error(ErrorCode::InvalidArgument, "generator list must be non-empty");
  }
  if (horizon < 0) {
    throw Error(ErrorCode::InvalidArgument, "horizon must be >= 0");
  }
  int rank = coefficient_rank(generators);
  if (rank < static_cast<int>(generators.size())) {
    throw Error(ErrorCode::DependentGenerators,
                "coefficient rank " + std::to_string(rank) + " < " +
                    std::to_string(generators.size()) + " generators");
  }

  SubspaceConfinementCertificate cert;
  cert.operator_label = default_label(L);
  cert.generator_count = static_cast<int>(generators.size());
  cert.m = 0;
  for (const Series& g : generators) {
    cert.m = std::max(cert.m, g.essential_dimension());
  }
  cert.annihilator_index = MultiIndex::unit(cert.m + 1);
  cert.witness = Series::variable(cert.m + 1);
  cert.horizon_checked = horizon;

  for (const Series& g0 : generators) {
    Series g = g0;
    for (int k = 0; k <= horizon; ++k) {
      if (k > 0) g = apply(L, g);
      cert.max_abs_functional_on_orbit =
          std::max(cert.max_abs_functional_on_orbit,
                   std::abs(coefficient_functional(g, cert.annihilator_index)));
      cert.max_iterate_dimension =
          std::max(cert.max_iterate_dimension, g.essential_dimension());
    }
  }
  cert.justification =
      "every iterate of every generator stays inside cylinder " +
      std::to_string(cert.m) +
      "; orbits of linear combinations are linear combinations of these "
      "iterates, so the whole subspace orbit is confined and the coefficient "
      "functional at e_" +
      std::to_string(cert.m + 1) + " annihilates its span";
  return cert;
}

std::vector<double> gap_small_upper_bounds(const std::vector<int>& blocks, int k,
                                           const std::vector<Radius>& radii) {
  if (k < 0) {
    throw Error(ErrorCode::InvalidArgument, "checkpoint index must be >= 0");
  }
  std::vector<double> out;
  out.reserve(radii.size());
  for (const Radius& r : radii) {
    double sum = 0.0;
    for (int m : blocks) {
      if (m > k) {
        int d = m - k;
        sum += std::exp(static_cast<double>(d) * std::log(r.value) -
                        std::lgamma(static_cast<double>(d) + 1.0));
      }
    }
    out.push_back(sum);
  }
  return out;
}

std::vector<int> gap_small_candidates(const std::vector<int>& blocks) {
  std::vector<int> candidates;
  for (std::size_t i = 1; i + 1 < blocks.size(); ++i) {
    candidates.push_back((blocks[i] + blocks[i + 1]) / 2);
  }
  candidates.push_back(blocks.back() + (blocks.back() + 1) / 2);  // floor(3m/2)
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  std::vector<int> out;
  for (int c : candidates) {
    if (!std::binary_search(blocks.begin(), blocks.end(), c)) out.push_back(c);
  }
  return out;
}

bool witness_invariants_hold(const SemiIrregularityWitness& w, std::string* why) {
  auto fail = [&](const std::string& message) {
    if (why) *why = message;
    return false;
  };
  if (w.small_checkpoints.empty()) return fail("no small checkpoints");
  if (w.big_checkpoints.empty()) return fail("no big checkpoints");
  if (!(w.eps > 0.0) || !(w.eps < w.delta)) {
    return fail("thresholds must satisfy 0 < eps < delta");
  }

  int prev = -1;
  for (const auto& s : w.small_checkpoints) {
    if (s.k <= prev) return fail("small checkpoints not strictly increasing");
    prev = s.k;
    if (s.upper_bounds.size() != w.radii.size()) {
      return fail("small checkpoint bound count does not match radii");
    }
    for (double b : s.upper_bounds) {
      if (!(b < w.eps)) {
        return fail("small checkpoint k=" + std::to_string(s.k) +
                    " bound not below eps");
      }
    }
  }
  prev = -1;
  for (const auto& b : w.big_checkpoints) {
    if (b.k <= prev) return fail("big checkpoints not strictly increasing");
    prev = b.k;
    if (!(b.lower_bound > w.delta)) {
      return fail("big checkpoint k=" + std::to_string(b.k) +
                  " bound not above delta");
    }
  }

  // Interleaving: a big k strictly inside every consecutive small pair, and a
  // small k strictly inside every consecutive big pair once past the first
  // small checkpoint.
  auto has_between = [](const auto& list, int lo, int hi) {
    for (const auto& item : list) {
      if (item.k > lo && item.k < hi) return true;
    }
    return false;
  };
  for (std::size_t i = 0; i + 1 < w.small_checkpoints.size(); ++i) {
    if (!has_between(w.big_checkpoints, w.small_checkpoints[i].k,
                     w.small_checkpoints[i + 1].k)) {
      return fail("no big checkpoint between small k=" +
                  std::to_string(w.small_checkpoints[i].k) + " and k=" +
                  std::to_string(w.small_checkpoints[i + 1].k));
    }
  }
  int first_small = w.small_checkpoints.front().k;
  for (std::size_t i = 0; i + 1 < w.big_checkpoints.size(); ++i) {
    int lo = w.big_checkpoints[i].k;
    int hi = w.big_checkpoints[i + 1].k;
    if (lo < first_small) continue;
    if (!has_between(w.small_checkpoints, lo, hi)) {
      return fail("no small checkpoint between big k=" + std::to_string(lo) +
                  " and k=" + std::to_string(hi));
    }
  }
  if (why) why->clear();
  return true;
}

SemiIrregularityWitness semi_irregular_gap_witness(int variable,
                                                   const std::vector<int>& blocks,
                                                   const std::vector<Radius>& radii,
                                                   double eps, double delta) {
  if (!(eps > 0.0) || !(eps < delta) || !(delta < 1.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "gap witness needs 0 < eps < delta < 1 (big bounds are exactly 1)");
  }
  SemiIrregularityWitness w;
  w.function = gap_series(blocks, variable);  // validates blocks
  w.op = ConvolutionSymbol::derivative(variable);
  w.operator_label = w.op.label();
  w.radii = radius_values(radii);
  w.eps = eps;
  w.delta = delta;

  // Big checkpoints: at k = m the term z^m/m! of the gap series has become
  // the constant 1 (exactly, by block structure) and every other block
  // vanishes at the origin.
  for (int m : blocks) {
    w.big_checkpoints.push_back(BigCheckpoint{m, 1.0});
  }
  for (int k : gap_small_candidates(blocks)) {
    std::vector<double> bounds = gap_small_upper_bounds(blocks, k, radii);
    bool all_small = true;
    for (double b : bounds) {
      if (!(b < eps)) all_small = false;
    }
    if (all_small) {
      w.small_checkpoints.push_back(SmallCheckpoint{k, std::move(bounds)});
    }
  }

  std::string why;
  if (!witness_invariants_hold(w, &why)) {
    throw Error(ErrorCode::InvalidArgument,
                "blocks/radii/eps do not yield a valid witness: " + why);
  }
  return w;
}

SemiIrregularityWitness lift_semi_irregular(const SemiIrregularityWitness& w,
                                            const ConvolutionSymbol& L,
                                            CylinderIndex n) {
  if (!(associated_operator(L, n) == w.op)) {
    throw Error(ErrorCode::AssociatedMismatch,
                "associated operator at n=" + std::to_string(n.n) +
                    " does not match the witness operator");
  }
  SemiIrregularityWitness lifted = w;
  lifted.function = embed(w.function, n);
  lifted.op = L;
  lifted.operator_label = default_label(L);
  return lifted;
}

ProximalAsymptoticResult proximal_asymptotic_check(const ConvolutionSymbol& L,
                                                   const Series& x, const Series& y,
                                                   int horizon,
                                                   const std::vector<Radius>& radii,
                                                   double eps, double delta) {
  if (horizon < 1) {
    throw Error(ErrorCode::InvalidArgument, "horizon must be >= 1");
  }
  radius_values(radii);
  ProximalAsymptoticResult result;
  result.horizon = horizon;

  std::vector<double> majorants;
  std::vector<int> big_ks;
  Series g = x - y;
  for (int k = 0; k <= horizon; ++k) {
    if (k > 0) g = apply(L, g);
    double m = 0.0;
    for (const Radius& r : radii) m = std::max(m, majorant_seminorm(g, r));
    majorants.push_back(m);
    if (m < eps) result.proximal_ks.push_back(k);
    if (std::abs(evaluate(g, {})) > delta) big_ks.push_back(k);
  }
  result.proximal_observed = !result.proximal_ks.empty();

  int first_stable = -1;
  for (int k = horizon; k >= 0 && majorants[k] < eps; --k) first_stable = k;
  if (first_stable >= 0) result.first_stable_k = first_stable;

  int max_small = result.proximal_ks.empty() ? -1 : result.proximal_ks.back();
  int max_big = big_ks.empty() ? -1 : big_ks.back();
  result.asymptotic_refuted = !big_ks.empty() && max_big >= max_small;
  if (result.asymptotic_refuted) result.refutation_k = max_big;
  result.asymptotic_observed = first_stable >= 0 && max_big < first_stable;

  result.note = "horizon-bounded verdict: sequence behavior checked only for k <= " +
                std::to_string(horizon);
  return result;
}

namespace {

SemiIrregularityWitness scale_witness(const SemiIrregularityWitness& base,
                                      Complex factor) {
  double s = std::abs(factor);
  SemiIrregularityWitness w = base;
  w.function = linear_combine({{factor, base.function}});
  w.eps = base.eps * s;
  w.delta = base.delta * s;
  for (auto& small : w.small_checkpoints) {
    for (double& b : small.upper_bounds) b *= s;
  }
  for (auto& big : w.big_checkpoints) big.lower_bound *= s;
  return w;
}

}  // namespace

LiYorkePairCertificate li_yorke_pair_certificate(const SemiIrregularityWitness& base,
                                                 Complex alpha, Complex lambda) {
  if (alpha == lambda) {
    throw Error(ErrorCode::EqualScalars, "pair scalars must differ");
  }
  double s = std::abs(alpha - lambda);
  if (s < 1e-6 || s > 1e6) {
    throw Error(ErrorCode::ScaleOutOfRange,
                "|alpha - lambda| must lie in [1e-6, 1e6] to keep thresholds "
                "meaningful");
  }
  LiYorkePairCertificate cert;
  cert.alpha = alpha;
  cert.lambda = lambda;
  cert.scale = s;
  cert.base_function = base.function;
  cert.witness = scale_witness(base, alpha - lambda);
  return cert;
}

ScrambledFamily scrambled_family(const SemiIrregularityWitness& base, int count) {
  if (count < 2) {
    throw Error(ErrorCode::InvalidArgument, "family size must be >= 2");
  }
  ScrambledFamily family;
  for (int i = 1; i <= count; ++i) {
    family.scalars.push_back(1.0 + static_cast<double>(i - 1) / count);
  }
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      family.pairs.push_back(li_yorke_pair_certificate(
          base, Complex(family.scalars[i], 0.0), Complex(family.scalars[j], 0.0)));
    }
  }
  return family;
}

DetectorVerdict semi_irregularity_detector(const ConvolutionSymbol& L, const Series& f,
                                           int horizon,
                                           const std::vector<Radius>& radii,
                                           double eps, double delta,
                                           int samples_per_axis) {
  if (horizon < 1) {
    throw Error(ErrorCode::InvalidArgument, "horizon must be >= 1");
  }
  if (!(eps < delta)) {
    throw Error(ErrorCode::InvalidArgument, "detector needs eps < delta");
  }
  radius_values(radii);

  DetectorVerdict verdict;
  std::vector<double> majorants;
  std::vector<int> all_big_ks;
  Series g = f;
  for (int k = 0; k <= horizon; ++k) {
    if (k > 0) g = apply(L, g);
    double m = 0.0;
    for (const Radius& r : radii) m = std::max(m, majorant_seminorm(g, r));
    majorants.push_back(m);
    if (m < eps) verdict.small_ks.push_back(k);

    double lower = std::abs(evaluate(g, {}));
    for (const Radius& r : radii) {
      lower = std::max(lower, grid_sup_estimate(g, r, samples_per_axis));
    }
    if (lower > delta) all_big_ks.push_back(k);
  }

  if (!verdict.small_ks.empty()) {
    int first_small = verdict.small_ks.front();
    for (int k : all_big_ks) {
      if (k > first_small) verdict.big_ks.push_back(k);
    }
  }
  verdict.observed = !verdict.small_ks.empty() && !verdict.big_ks.empty();

  std::ostringstream diag;
  if (verdict.observed) {
    diag << "small iterate at k=" << verdict.small_ks.front()
         << " followed by a big iterate at k=" << verdict.big_ks.front()
         << "; horizon-bounded observation, not a proof";
  } else if (verdict.small_ks.empty()) {
    if (majorants.back() > majorants.front()) {
      diag << "no iterate fell below eps; orbit norms grow (p[0]=" << majorants.front()
           << ", p[" << horizon << "]=" << majorants.back() << ")";
    } else {
      diag << "no iterate fell below eps within the horizon";
    }
  } else {
    diag << "orbit falls below eps at k=" << verdict.small_ks.front()
         << " but never returns above delta; looks asymptotic to zero";
  }
  diag << " (K=" << horizon << ", eps=" << eps << ", delta=" << delta << ")";
  verdict.diagnostics = diag.str();
  return verdict;
}

}  // namespace holodyn
