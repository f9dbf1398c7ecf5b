// Copyright 2026 the towerlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOWERLAB_CLASSIFY_HPP_
#define TOWERLAB_CLASSIFY_HPP_

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "towerlab/distributions.hpp"

namespace towerlab::classify {

enum class Outcome {
    kConvergesAS,
    kDivergesToInfinityAS,
    kDivergesByOscillation,
    kIndeterminate,
};

std::string outcome_name(Outcome o);

struct Verdict {
    Outcome outcome;
    std::string rule;    // the single clause that fired
    std::string detail;  // numeric evidence
};

// --- tail conditions for the a = 1 boundary case -----------------------------

struct UnknownTail {};
struct FiniteLogStarMoment {};  // E[log*(1/(A-1))] declared finite
struct InfiniteFractionalMoment {
    double alpha;  // in (0, 1)
};
struct TailSequence {
    std::function<double(long)> q;  // q(n) = P(A <= e^(1/tetrate(e, n))), nonincreasing
};

using TailCondition =
    std::variant<UnknownTail, FiniteLogStarMoment, InfiniteFractionalMoment, TailSequence>;

// ----------------------------------------------------------------------------

/// Applies the support-bound rules in a fixed order; the a = 1, finite
/// b > e^(1/e) case delegates to the tail condition.
Verdict classify_bounds(const SupportBounds& sb, const TailCondition& tail = UnknownTail{});

struct SeriesResult {
    std::vector<double> partial_sums;  // partial sums of E[N] = sum_k prod_{j<k} (1 - q(j))
    Verdict verdict;
    double expectation_estimate;  // last partial sum
};

/// Partial sums of the stopping-time series in log space. Convergence of the
/// series (finite E[N]) means the tower converges; a product bounded below
/// (sum of q finite, detected by a geometric envelope) means divergence to
/// infinity; anything else is reported indeterminate.
SeriesResult stopping_time_series(const TailSequence& tail, long n_max = 1'000'000);

/// Analytic tail sequence q(n) = P(A <= e^(1/tetrate(e, n))) for distributions
/// with inf support 1 and a near-one tail model. The threshold offset is
/// expm1(1/tetrate(e, n)) so no cancellation occurs for n >= 3.
TailSequence tail_sequence_for(const DistributionSpec& dist);

}  // namespace towerlab::classify

#endif  // TOWERLAB_CLASSIFY_HPP_
