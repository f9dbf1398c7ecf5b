// Copyright 2026 the towerlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOWERLAB_SIM_HPP_
#define TOWERLAB_SIM_HPP_

#include <cstdint>
#include <limits>
#include <vector>

#include "towerlab/distributions.hpp"
#include "towerlab/level_index.hpp"
#include "towerlab/rng.hpp"

namespace towerlab::sim {

/// One draw of A. Near-one families carry the tail coordinates alongside the
/// representable value so threshold comparisons stay exact.
struct Draw {
    LevelIndex value;
    // For draws of the form e^(1/tetrate(e, L)): the level L, else -1.
    int near_one_level = -1;
    // For LogStarTail draws: the underlying uniform, so "A <= e^(1/tetrate(e,n))"
    // can be decided as u <= q(n) for every n. NaN otherwise.
    double tail_u = std::numeric_limits<double>::quiet_NaN();
};

Draw sample_a(const DistributionSpec& dist, SubstreamRng& rng);

/// True iff the draw satisfies A <= e^(1/tetrate(e, n)). Tail-family draws
/// resolve against their own q(n); plain doubles are compared via 1/ln(A)
/// against tetrate(e, n) in level-index space.
bool below_threshold(const DistributionSpec& dist, const Draw& draw, long n);

struct TowerSample {
    LevelIndex value;
    int depth_used = 0;
    bool diverged = false;
};

/// One omega-path: draws A_1..A_depth once and returns T_1..T_depth, each
/// evaluated top-down (innermost first). The diverged flag trips when the
/// value exceeds double range for two consecutive heights; from then on the
/// reported value saturates to the Overflow sentinel.
std::vector<TowerSample> tower_forward(const DistributionSpec& dist, int depth,
                                       SubstreamRng& rng);

/// One draw with the law of T_depth via the backward recursion
/// S_k = A_k^(S_{k-1}), S_0 = 1 (same marginal, O(depth) work).
TowerSample tower_backward(const DistributionSpec& dist, int depth, SubstreamRng& rng);

struct GapStats {
    double mean = 0.0;
    double median = 0.0;
    double q10 = 0.0;
    double q90 = 0.0;
    double min = 0.0;
    double max = 0.0;
};

struct OscillationReport {
    double even_limit_est = 0.0;
    double odd_limit_est = 0.0;
    double gap = 0.0;  // even - odd estimate
    GapStats per_path_gaps;
    int paths = 0;
    int even_depth = 0;
};

/// Measures T_(2n) - T_(2n+1) per path at the final depth. Requires
/// sup(support) <= 1 (the even/odd envelope structure needs it).
OscillationReport oscillation_gap(const DistributionSpec& dist, int depth, int paths,
                                  std::uint64_t seed, int threads = 1);

struct StoppingEstimate {
    double mean_censored = 0.0;      // E[min(N, n_cap)] estimate
    double censored_fraction = 0.0;  // fraction of paths with N > n_cap
    double std_error = 0.0;          // standard error of mean_censored
    int paths = 0;
};

/// Monte Carlo estimate of E[min(N, n_cap)] with N = inf{n : A_n below the
/// n-th threshold}. Requires inf(support) = 1.
StoppingEstimate estimate_stopping_time(const DistributionSpec& dist, long n_cap, int paths,
                                        std::uint64_t seed, int threads = 1);

struct LogStarEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    int paths = 0;
};

/// Empirical E[log* T_depth] for the heavy-tailed demo distribution, with the
/// tower evaluated in level-index space.
LogStarEstimate heavy_demo_logstar_bound(int depth, int paths, std::uint64_t seed,
                                         int threads = 1);

}  // namespace towerlab::sim

#endif  // TOWERLAB_SIM_HPP_
