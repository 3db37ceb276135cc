// Canonical fringe-interval-fringe decomposition of membership sets,
// stabilization verification, and explicit witness construction.
#pragma once

#include "sumset/core.hpp"
#include "sumset/repcount.hpp"

namespace sumset {

// S = low_fringe  U  [c, max_value - d]  U  {max_value - x : x in high_fringe}
// with low_fringe in [0, c-2] and high_fringe in [0, d-2].
struct Decomposition {
  Int max_value = 0; // M = h * a_k of the source set
  Int c = 0;         // left end of the central interval
  Int d = 0;         // max_value - d = right end of the central interval
  std::vector<Int> low_fringe;  // ascending
  std::vector<Int> high_fringe; // offsets below max_value, ascending

  // Same (c, d, fringes); max_value is allowed to differ.
  bool same_shape(const Decomposition &o) const {
    return c == o.c && d == o.d && low_fringe == o.low_fringe &&
           high_fringe == o.high_fringe;
  }
};

// Central run = maximal run of consecutive members containing `anchor` when
// given, otherwise the longest run (leftmost on ties).
Decomposition decompose(const MembershipSet &s, std::optional<Int> anchor = {});

// The set described by `dec` over [0, m]; nullopt when a fringe element
// falls outside that range (the description cannot match any subset of it).
std::optional<Bitmap> reconstruct(const Decomposition &dec, Int m);

struct SetDiff {
  std::vector<Int> missing;    // described but absent
  std::vector<Int> unexpected; // present but not described
};

struct VerificationReport {
  ThresholdReport thresholds;
  Decomposition stable;
  Int h_lo = 0;
  Int h_hi = 0;
  bool anchor_interval_ok = false; // [c'-a_k+1, c'-1] inside set at h_lo
  bool anchor_constant_ok = false; // c' inside set at h_lo + 1
  std::optional<Int> first_failure;
  SetDiff diff; // at first_failure

  bool pass() const {
    return !first_failure && anchor_interval_ok && anchor_constant_ok;
  }
};

Int default_horizon(const GeneratorSet &a); // 2 * a_k + 2

// Decompose at h = h_stable anchored at c' - 1, then check that the same
// (c, d, fringes) reconstructs membership exactly for every
// h in [h_stable, h_stable + horizon].
VerificationReport verify_stabilization(const GeneratorSet &a, Int t,
                                        Int horizon, const Budget &budget = {});

// Smallest h0 <= h_stable such that the stable decomposition, with a
// nonempty central interval, reconstructs membership exactly for every
// h in [h0, h_stable + horizon]. Returns h_stable when it cannot be lowered.
Int empirical_threshold(const GeneratorSet &a, Int t, Int horizon,
                        const Budget &budget = {});

// Sharpness check on the family A = {0, n, n+1}.
struct OptimalityReport {
  Int n = 0;
  Int t = 0;
  Int h_stable = 0;             // must equal t*(n+1) - 2
  Int c = 0;                    // must equal t*n*(n+1) - 2n
  Int below_bound = 0;          // t*n*(n+1) - 2(n+1)
  std::optional<Int> below_max; // max of membership at h_stable - 1
  bool structure_ok = false;    // stabilization verified over the horizon
  bool h_matches = false;
  bool c_matches = false;
  bool below_bounded = false; // below_max <= below_bound < c

  bool pass() const {
    return structure_ok && h_matches && c_matches && below_bounded;
  }
};

OptimalityReport verify_optimality(Int n, Int t, const Budget &budget = {});

// t distinct multiplicity vectors representing n with weight <= h_stable,
// for n in the open window (c' - a_k, c'). Vector s (1-based) keeps
// x_i in [(s-1)*a_{i+1}, s*a_{i+1} - 1] for i < k.
std::vector<std::vector<Int>> anchor_window_witnesses(const GeneratorSet &a,
                                                      Int t, Int n);

// The t explicit vectors showing the anchor constant c' has at least t
// representations of weight <= h_stable + 1.
std::vector<std::vector<Int>> anchor_constant_witnesses(const GeneratorSet &a,
                                                        Int t);

} // namespace sumset
