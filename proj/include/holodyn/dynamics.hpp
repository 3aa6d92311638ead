// Copyright (c) the holodyn developers
// SPDX-License-Identifier: Apache-2.0

#ifndef HOLODYN_DYNAMICS_HPP_
#define HOLODYN_DYNAMICS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "holodyn/symbol.hpp"

namespace holodyn {

/// One row of an orbit: the k-th iterate's seminorms, value at the origin,
/// and essential dimension. Seminorm vectors are indexed like the trace's
/// radius list.
struct OrbitRecord {
  int k = 0;
  Complex eval_at_zero;
  int essential_dim = 0;
  std::vector<double> majorants;
  std::vector<double> grid_sups;
};

/// Finite-horizon record of {L^k f : k = 0..horizon}.
struct OrbitTrace {
  std::string operator_label;
  std::vector<double> radii;
  int horizon = 0;
  int samples_per_axis = 8;
  std::vector<OrbitRecord> records;
};

OrbitTrace orbit_trace(const ConvolutionSymbol& L, const Series& f, int horizon,
                       const std::vector<Radius>& radii, int samples_per_axis = 8);

/// Any linear operator given only by its action; used for the contrast cases
/// that are *not* convolution operators.
using BlackBoxOperator = std::function<Series(const Series&)>;

/// f -> z_{essential_dimension(f)+1} * f. Strictly raises the dimension each
/// step — the canonical non-example for orbit confinement.
BlackBoxOperator variable_raising_operator();

/// Orbit confinement evidence. For symbol operators the bound n is uniform in
/// the horizon (the operator cannot create new variables); for black-box
/// operators only the observed per-horizon bound N(K) is claimed.
struct ConfinementCertificate {
  std::string operator_label;
  bool symbol_operator = false;
  int horizon = 0;
  int uniform_bound = 0;               // n, meaningful when symbol_operator
  std::vector<int> per_iterate_dim;    // essential_dimension(T^k f), k = 0..K
  std::vector<int> per_horizon_bound;  // N(K') = max over k <= K'
  bool uniform = false;                // per_horizon_bound is constant
};

ConfinementCertificate confinement_certificate(const ConvolutionSymbol& L,
                                               const Series& f, int horizon);
ConfinementCertificate confinement_certificate(const BlackBoxOperator& T,
                                               std::string label, const Series& f,
                                               int horizon);

/// A continuous coefficient functional that vanishes on the checked orbit
/// (hence on its span) but takes value 1 on the witness monomial — the finite
/// rendering of "the orbit span is not dense".
struct NonCyclicityCertificate {
  std::string operator_label;
  int n = 0;                    // cylinder that confines the orbit
  MultiIndex annihilator_index;  // e_{n+1}
  Series witness;                // z_{n+1}
  int horizon_checked = 0;
  double max_abs_functional_on_orbit = 0.0;  // exact 0 for validity
  Complex functional_on_witness;             // exact 1
};

NonCyclicityCertificate non_cyclicity_certificate(const ConvolutionSymbol& L,
                                                  const Series& f, int horizon);

/// Same mechanism for the orbit of a finite-dimensional subspace V =
/// span(generators): every iterate of every generator stays inside cylinder
/// m, so by linearity so does the orbit of all of V.
struct SubspaceConfinementCertificate {
  std::string operator_label;
  int generator_count = 0;
  int m = 0;  // confining cylinder
  MultiIndex annihilator_index;  // e_{m+1}
  Series witness;                // z_{m+1}
  int horizon_checked = 0;
  double max_abs_functional_on_orbit = 0.0;
  int max_iterate_dimension = 0;  // must stay <= m for validity
  std::string justification;
};

/// Throws DependentGenerators when the generators are linearly dependent
/// (exact-pivot elimination on the coefficient matrix — no tolerance).
SubspaceConfinementCertificate subspace_orbit_certificate(
    const ConvolutionSymbol& L, const std::vector<Series>& generators, int horizon);

/// Finite evidence that the orbit of `function` under `op` does not converge
/// to zero (big checkpoints: exact lower bounds on |(L^k f)(0)|) yet has a
/// subsequence converging to zero (small checkpoints: closed-form upper
/// bounds on p_r(L^k f), all radii).
struct SmallCheckpoint {
  int k = 0;
  std::vector<double> upper_bounds;  // per radius, each < eps
};

struct BigCheckpoint {
  int k = 0;
  double lower_bound = 0.0;  // |(L^k f)(0)| >= this > delta
};

struct SemiIrregularityWitness {
  std::string operator_label;
  ConvolutionSymbol op;
  Series function;
  std::vector<double> radii;
  double eps = 1e-6;
  double delta = 0.9;
  std::vector<SmallCheckpoint> small_checkpoints;
  std::vector<BigCheckpoint> big_checkpoints;
};

/// Checks the witness structure: thresholds respected at every checkpoint,
/// both checkpoint lists strictly increasing, and the lists interleave (a big
/// k between consecutive small ks; a small k between consecutive big ks once
/// past the first small). On failure *why (when given) explains the breach.
bool witness_invariants_hold(const SemiIrregularityWitness& w, std::string* why = nullptr);

/// Closed-form p_r(d_j^k gap) = sum over blocks m > k of r^{m-k}/(m-k)!,
/// one value per radius. Exposed because tests re-derive it with exact
/// factorials.
std::vector<double> gap_small_upper_bounds(const std::vector<int>& blocks, int k,
                                           const std::vector<Radius>& radii);

/// Candidate small checkpoints for a block list: midpoints of consecutive
/// blocks plus 3/2 of the top block (for blocks 2^0..2^J this is 3*2^{i-1},
/// i = 1..J). Candidates whose bound is not below eps at every radius are
/// filtered out of the witness.
std::vector<int> gap_small_candidates(const std::vector<int>& blocks);

/// The constructive witness for L = d_j on the gap series: big checkpoints at
/// every block (the surviving constant term is exactly 1), small checkpoints
/// from gap_small_candidates, bounds computed exactly from the block
/// structure (never from the floating orbit).
SemiIrregularityWitness semi_irregular_gap_witness(int variable,
                                                   const std::vector<int>& blocks,
                                                   const std::vector<Radius>& radii,
                                                   double eps = 1e-6,
                                                   double delta = 0.9);

/// Transfers a cylinder-n witness to a full-space operator L whose associated
/// operator at n equals the witness's operator: every iterate, seminorm, and
/// evaluation coincides on the shared coefficient tables, so every bound
/// carries over verbatim. Throws AssociatedMismatch when the symbols differ.
SemiIrregularityWitness lift_semi_irregular(const SemiIrregularityWitness& w,
                                            const ConvolutionSymbol& L,
                                            CylinderIndex n);

/// Horizon-bounded reading of the orbit of x - y.
struct ProximalAsymptoticResult {
  bool proximal_observed = false;
  std::vector<int> proximal_ks;  // all k <= K with every-radius majorant < eps
  bool asymptotic_observed = false;
  std::optional<int> first_stable_k;  // suffix from here stays < eps
  bool asymptotic_refuted = false;
  std::optional<int> refutation_k;  // lower bound > delta at/after the last small k
  int horizon = 0;
  std::string note;
};

ProximalAsymptoticResult proximal_asymptotic_check(const ConvolutionSymbol& L,
                                                   const Series& x, const Series& y,
                                                   int horizon,
                                                   const std::vector<Radius>& radii,
                                                   double eps = 1e-6,
                                                   double delta = 0.9);

/// Pair (alpha f, lambda f): Li-Yorke by linearity, with every witness bound
/// scaled by |alpha - lambda|.
struct LiYorkePairCertificate {
  Complex alpha;
  Complex lambda;
  double scale = 1.0;  // |alpha - lambda|
  Series base_function;
  SemiIrregularityWitness witness;  // for (alpha - lambda) f
};

/// Throws EqualScalars when alpha = lambda; ScaleOutOfRange when
/// |alpha - lambda| leaves [1e-6, 1e6].
LiYorkePairCertificate li_yorke_pair_certificate(const SemiIrregularityWitness& base,
                                                 Complex alpha, Complex lambda);

/// Scalars 1 + (i-1)/m, i = 1..m, plus all m(m-1)/2 pair certificates: a
/// finite sample of a scrambled set inside span{f}.
struct ScrambledFamily {
  std::vector<double> scalars;
  std::vector<LiYorkePairCertificate> pairs;
};

ScrambledFamily scrambled_family(const SemiIrregularityWitness& base, int count);

/// Empirical semi-irregularity scan for arbitrary symbols: Observed needs a
/// small iterate followed by a later big one. A heuristic, never a disproof —
/// the verdict says so.
struct DetectorVerdict {
  bool observed = false;
  std::vector<int> small_ks;
  std::vector<int> big_ks;  // big ks after the first small k
  std::string diagnostics;
};

DetectorVerdict semi_irregularity_detector(const ConvolutionSymbol& L, const Series& f,
                                           int horizon,
                                           const std::vector<Radius>& radii,
                                           double eps = 1e-6, double delta = 0.9,
                                           int samples_per_axis = 8);

}  // namespace holodyn

#endif  // HOLODYN_DYNAMICS_HPP_
