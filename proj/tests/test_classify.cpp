// Copyright 2026 the towerlab authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "towerlab/classify.hpp"
#include "towerlab/constants.hpp"
#include "towerlab/errors.hpp"
#include "towerlab/special.hpp"

using namespace towerlab;
using namespace towerlab::classify;

TEST_CASE("rule table on the documented examples") {
    auto v = classify_bounds({1.2, 1.4});
    CHECK(v.outcome == Outcome::kConvergesAS);
    CHECK(v.rule == "Thm1-case1");

    v = classify_bounds({2.0, 3.0});
    CHECK(v.outcome == Outcome::kDivergesToInfinityAS);
    CHECK(v.rule == "Cor-div-1");

    v = classify_bounds({0.0, 0.05});
    CHECK(v.outcome == Outcome::kConvergesAS);
    CHECK(v.rule == "Cor-conv-1");

    // Inside the band the earlier rule wins; straddling 1 with b past
    // e^(1/e) falls to the a < 1 <= b clause.
    v = classify_bounds({0.5, 1.2});
    CHECK(v.outcome == Outcome::kConvergesAS);
    CHECK(v.rule == "Cor-conv-2");
    v = classify_bounds({0.5, 2.0});
    CHECK(v.outcome == Outcome::kConvergesAS);
    CHECK(v.rule == "Cor-conv-3");

    // Non-diagonal band case, decided by the sign of a - G(b).
    const double g = g_boundary(0.065);
    v = classify_bounds({0.06, 0.065});
    CHECK(v.rule == "Thm1-case3");
    if (0.06 < g) {
        CHECK(v.outcome == Outcome::kConvergesAS);
    } else {
        CHECK(v.outcome == Outcome::kDivergesByOscillation);
    }

    // Oscillation: a point mass well below e^-e.
    v = classify_bounds({0.04, 0.04});
    CHECK(v.outcome == Outcome::kDivergesByOscillation);

    // Point mass in [e^-e, 1]: deterministic tower converges.
    v = classify_bounds({0.5, 0.5});
    CHECK(v.outcome == Outcome::kConvergesAS);

    // a = 1 with unbounded support is outside the theorem.
    v = classify_bounds({1.0, std::numeric_limits<double>::infinity()});
    CHECK(v.outcome == Outcome::kIndeterminate);

    // a = 1, finite b above e^(1/e): the tail decides.
    v = classify_bounds({1.0, 2.0});
    CHECK(v.outcome == Outcome::kIndeterminate);  // unknown tail
    v = classify_bounds({1.0, 2.0}, FiniteLogStarMoment{});
    CHECK(v.outcome == Outcome::kDivergesToInfinityAS);
    CHECK(v.rule == "Cor-div-3");
    v = classify_bounds({1.0, 2.0}, InfiniteFractionalMoment{0.5});
    CHECK(v.outcome == Outcome::kConvergesAS);
    CHECK(v.rule == "Cor-conv-5");

    CHECK_THROWS_AS(classify_bounds({2.0, 1.0}), InvalidBounds);
    CHECK_THROWS_AS(classify_bounds({0.0, 0.0}), InvalidBounds);
}

TEST_CASE("classifier is total and consistent under shrinking") {
    // Sweep a grid of bounds; every call must produce a verdict, and
    // shrinking the support never flips a monotone convergence clause.
    for (int ia = 0; ia <= 60; ++ia) {
        for (int ib = ia; ib <= 60; ++ib) {
            const double a = 0.05 * ia;
            const double b = 0.05 * ib;
            if (b == 0.0) continue;
            const Verdict v = classify_bounds({a, b});
            const double a2 = std::min(a + 0.05, b);
            const double b2 = std::max(b - 0.05, a2);
            if (!(a2 <= b2) || b2 == 0.0) continue;
            const Verdict w = classify_bounds({a2, b2});
            if ((v.rule == "Thm1-case1" || v.rule == "Cor-conv-3" || v.rule == "Cor-conv-2") &&
                w.rule == v.rule) {
                CHECK(w.outcome == Outcome::kConvergesAS);
            }
            if (v.rule == "Cor-div-1" && w.rule == "Cor-div-1") {
                CHECK(w.outcome == Outcome::kDivergesToInfinityAS);
            }
        }
    }
}

TEST_CASE("stopping-time series: summable tail diverges to infinity") {
    // q(n) = 2^-n: sum q finite, so the product of (1 - q) stays positive.
    TailSequence q{[](long n) { return std::pow(0.5, static_cast<double>(n)); }};
    const SeriesResult r = stopping_time_series(q);
    CHECK(r.verdict.outcome == Outcome::kDivergesToInfinityAS);
    CHECK(r.verdict.rule == "Cor-div-3");
    CHECK(r.expectation_estimate > 1.0);
}

TEST_CASE("stopping-time series: q(1) = 1 gives E[N] = 1 exactly") {
    TailSequence q{[](long n) { return 1.0 / std::sqrt(static_cast<double>(n)); }};
    const SeriesResult r = stopping_time_series(q);
    CHECK(r.verdict.outcome == Outcome::kConvergesAS);
    CHECK(r.expectation_estimate == doctest::Approx(1.0).epsilon(1e-12));

    TailSequence ones{[](long) { return 1.0; }};
    const SeriesResult r1 = stopping_time_series(ones);
    CHECK(r1.verdict.outcome == Outcome::kConvergesAS);
    CHECK(r1.expectation_estimate == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("stopping-time series: subgeometric near-one mass converges") {
    // q(n) = 0.5 n^(-1/2): terms fall like exp(-sqrt(n)), summable, and the
    // series stabilizes without ever hitting a zero factor.
    TailSequence q{[](long n) { return 0.5 / std::sqrt(static_cast<double>(n)); }};
    const SeriesResult r = stopping_time_series(q);
    CHECK(r.verdict.outcome == Outcome::kConvergesAS);
    // Direct summation oracle.
    double direct = 0.0, logp = 0.0;
    for (long k = 1; k <= 20000; ++k) {
        direct += std::exp(logp);
        logp += std::log1p(-0.5 / std::sqrt(static_cast<double>(k)));
    }
    CHECK(r.expectation_estimate == doctest::Approx(direct).epsilon(1e-9));
}

TEST_CASE("stopping-time series rejects malformed q") {
    TailSequence rising{[](long n) { return n == 1 ? 0.1 : 0.9; }};
    CHECK_THROWS_AS(stopping_time_series(rising), DomainError);
    TailSequence outside{[](long) { return 1.5; }};
    CHECK_THROWS_AS(stopping_time_series(outside), DomainError);
}

TEST_CASE("tail sequence for Uniform[1,2]") {
    DistributionSpec dist{Uniform{1.0, 2.0}};
    const TailSequence q = tail_sequence_for(dist);
    // q(1) = e^(1/e) - 1, q(2) = e^(1/e^e) - 1, computed analytically.
    CHECK(q.q(1) == doctest::Approx(std::exp(1.0 / kE) - 1.0).epsilon(1e-14));
    CHECK(q.q(2) == doctest::Approx(std::exp(std::exp(-kE)) - 1.0).epsilon(1e-13));
    // n = 3 uses the expm1 path: threshold offset 1/(e tetrated 3).
    const double e3 = std::exp(std::exp(std::exp(1.0)));
    CHECK(q.q(3) == doctest::Approx(std::expm1(1.0 / e3)).epsilon(1e-10));
    CHECK(q.q(4) == 0.0);  // threshold offset below double resolution
    CHECK(q.q(100) == 0.0);

    // Downstream: the classifier lands on divergence via the series.
    const Verdict v = classify_bounds({1.0, 2.0}, q);
    CHECK(v.outcome == Outcome::kDivergesToInfinityAS);
}

TEST_CASE("tail sequence for a uniform bounded away from 1 is zero") {
    // Support [1.5, 2] sits above every threshold.
    DistributionSpec dist{Uniform{1.5, 2.0}};
    const TailSequence q = tail_sequence_for(dist);
    for (long n = 1; n <= 10; ++n) CHECK(q.q(n) == 0.0);
}

TEST_CASE("tail sequence for the log-star family is the family itself") {
    LogStarTail fam;
    fam.form = LogStarTail::Form::kPower;
    fam.c = 1.0;
    fam.p = 0.5;
    DistributionSpec dist{fam};
    const TailSequence q = tail_sequence_for(dist);
    for (long n : {1L, 2L, 5L, 50L}) {
        CHECK(q.q(n) == doctest::Approx(fam.q(n)).epsilon(1e-15));
    }
}

TEST_CASE("tail sequence for a point mass above the thresholds is zero") {
    DistributionSpec dist{PointMasses{{{1.5, 1.0}}}};
    const TailSequence q = tail_sequence_for(dist);
    for (long n = 1; n <= 20; ++n) CHECK(q.q(n) == 0.0);
}

TEST_CASE("tail sequence requires a near-one model") {
    DistributionSpec dist{ProductUniform{}};
    CHECK_THROWS_AS(tail_sequence_for(dist), UnsupportedDistribution);
}
