// Copyright 2026 the towerlab authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "towerlab/constants.hpp"
#include "towerlab/errors.hpp"
#include "towerlab/invtower.hpp"
#include "towerlab/rng.hpp"
#include "towerlab/stats.hpp"

using namespace towerlab;
using namespace towerlab::invtower;

TEST_CASE("feasibility region") {
    CHECK(feasibility({0.0, 1.0, 0.5}).feasible);   // powers of Unif(0,1): r in [0,1]
    CHECK(feasibility({0.0, 1.0, 1.0}).feasible);
    CHECK(feasibility({0.5, 2.0, 0.3}).feasible);   // 0.3 <= 1/(1+ln 2) ~ 0.5906
    CHECK(feasibility({0.0, 1.0, 0.0}).feasible);   // degenerate T = 1 accepted

    const auto too_big = feasibility({0.5, 2.0, 0.7});
    CHECK(!too_big.feasible);
    CHECK(too_big.reason.find("1/(1+ln beta)") != std::string::npos);

    const auto off_one = feasibility({1.5, 2.0, 0.1});
    CHECK(!off_one.feasible);
    CHECK(off_one.reason.find("outside") != std::string::npos);

    CHECK(!feasibility({0.0, 1.0, -0.2}).feasible);

    const auto exp_case = feasibility({0.0, 1.0, std::numeric_limits<double>::infinity()});
    CHECK(!exp_case.feasible);
    CHECK(exp_case.reason.find("p = 1/r = 0") != std::string::npos);

    CHECK_THROWS_AS(feasibility({-0.1, 1.0, 0.5}), DomainError);
    CHECK_THROWS_AS(feasibility({1.0, 0.5, 0.5}), DomainError);
}

TEST_CASE("cdf values and closed form") {
    // F(1) = (1 - alpha) / (beta - alpha).
    InvTowerCDF f{{0.5, 2.0, 0.3}};
    CHECK(cdf_eval(f, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    // alpha = 0, beta = 1, r = 1/2: F(x) = x^2 (1 - ln x) on (0, 1).
    InvTowerCDF g{{0.0, 1.0, 0.5}};
    for (int i = 1; i < 100; ++i) {
        const double x = static_cast<double>(i) / 100.0;
        const double expect = x * x * (1.0 - std::log(x));
        CHECK(cdf_eval(g, x) == doctest::Approx(expect).epsilon(1e-12));
    }
    CHECK(cdf_eval(g, 0.0) == 0.0);
    CHECK(cdf_eval(g, 1.0) == 1.0);  // support top is 1^1 = 1 here

    // Below the support floor the CDF is 0; at and above the top it is 1.
    CHECK(cdf_eval(f, f.support_lo() * 0.999) == 0.0);
    CHECK(cdf_eval(f, f.support_hi()) == 1.0);
    CHECK(cdf_eval(f, 2.0) == 1.0);

    CHECK_THROWS_AS(cdf_eval(InvTowerCDF{{0.5, 2.0, 0.7}}, 1.0), InfeasibleParams);
}

TEST_CASE("cdf is continuous at 1 (no atom for these laws)") {
    InvTowerCDF f{{0.5, 2.0, 0.3}};
    const double below = cdf_eval(f, 1.0 - 1e-10);
    const double above = cdf_eval(f, 1.0 + 1e-10);
    const double at = cdf_eval(f, 1.0);
    CHECK(std::fabs(below - at) < 1e-8);
    CHECK(std::fabs(above - at) < 1e-8);
}

TEST_CASE("cdf monotone nondecreasing with limits 0 and 1") {
    for (auto params : {InvTowerParams{0.0, 1.0, 0.5}, InvTowerParams{0.5, 2.0, 0.3},
                        InvTowerParams{0.2, 1.5, 0.4}}) {
        InvTowerCDF f{params};
        const double lo = f.support_lo(), hi = f.support_hi();
        double prev = -1.0;
        for (int i = 0; i <= 10000; ++i) {
            const double x = lo + (hi - lo) * static_cast<double>(i) / 10000.0;
            const double v = cdf_eval(f, x);
            CHECK(v >= prev - 1e-12);
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
            prev = v;
        }
        CHECK(cdf_eval(f, lo * 0.999999) <= 1e-12);
        CHECK(cdf_eval(f, hi) == 1.0);
    }
}

TEST_CASE("recursion depth stays within the analytic bound") {
    InvTowerCDF f{{0.5, 2.0, 0.3}};
    const double a = f.params.a(), b = f.params.b();
    const double hi = f.support_hi();
    for (double x : {1.0001, 1.001, 1.01, 1.1, hi * 0.999}) {
        const int steps = cdf_recursion_depth(f, x);
        const int bound = static_cast<int>(std::ceil(
                              std::log(std::log(hi) / std::log(x)) / std::log(b / a))) +
                          2;
        CHECK(steps <= bound);
    }
}

TEST_CASE("monotonicity audit at and above the feasibility edge") {
    for (double beta : {1.2, 2.0}) {
        const double r_edge = 1.0 / (1.0 + std::log(beta));
        InvTowerCDF clean{{0.0, beta, r_edge}};
        CHECK(monotonicity_audit(clean, 10000).empty());

        InvTowerCDF dirty{{0.0, beta, r_edge * 1.05}};
        const auto violations = monotonicity_audit(dirty, 10000);
        CHECK(!violations.empty());
        // Violations cluster near the top of the support.
        CHECK(violations.back().x_hi > dirty.support_hi() * 0.8);
    }
    // beta < 1: F exceeds 1 below the support top, so the drop to 1 at the
    // top shows up as a violation.
    InvTowerCDF sub{{0.0, 0.9, 0.5}};
    CHECK(!monotonicity_audit(sub, 10000).empty());
}

TEST_CASE("inverse sampling round trip and self-consistency") {
    InvTowerCDF g{{0.0, 1.0, 0.5}};
    const double u = cdf_eval(g, 0.5);
    CHECK(inv_sample(g, u) == doctest::Approx(0.5).epsilon(1e-10));

    // KS of inverse-transform draws against the CDF itself.
    SubstreamRng rng = SubstreamRng::for_path(31337, 5);
    std::vector<double> xs;
    xs.reserve(20000);
    for (int i = 0; i < 20000; ++i) {
        double v = rng.uniform01();
        while (v <= 0.0) v = rng.uniform01();
        xs.push_back(inv_sample(g, v));
    }
    const auto ks = stats::ks_one_sample(xs, [&](double x) { return cdf_eval(g, x); });
    CHECK(ks.p_value > 0.01);

    CHECK_THROWS_AS(inv_sample(InvTowerCDF{{0.5, 2.0, 0.7}}, 0.5), InfeasibleParams);
    CHECK(inv_sample(InvTowerCDF{{0.5, 2.0, 0.0}}, 0.25) == 1.0);  // r = 0: unit step
}

TEST_CASE("fixed-point law: A^T has the law of T") {
    // T = U^r with U uniform; A from the inverse tower CDF; A^T must match T.
    for (auto params : {InvTowerParams{0.0, 1.0, 0.5}, InvTowerParams{0.5, 2.0, 0.3}}) {
        REQUIRE(feasibility(params).feasible);
        InvTowerCDF f{params};
        SubstreamRng rng = SubstreamRng::for_path(271828, 1);
        std::vector<double> at;
        at.reserve(20000);
        for (int i = 0; i < 20000; ++i) {
            double u = rng.uniform01();
            while (u <= 0.0) u = rng.uniform01();
            const double a = inv_sample(f, u);
            const double t = std::pow(params.alpha + (params.beta - params.alpha) *
                                                         rng.uniform01(),
                                      params.r);
            at.push_back(std::pow(a, t));
        }
        const double alpha = params.alpha, beta = params.beta, r = params.r;
        const auto cdf_t = [alpha, beta, r](double x) {
            if (r == 0.0) return x >= 1.0 ? 1.0 : 0.0;
            const double u = std::pow(x, 1.0 / r);
            return std::clamp((u - alpha) / (beta - alpha), 0.0, 1.0);
        };
        const auto ks = stats::ks_one_sample(at, cdf_t);
        CHECK(ks.p_value > 0.01);
    }
}

TEST_CASE("jump consistency: continuous law never returns exactly 1") {
    InvTowerCDF f{{0.5, 2.0, 0.3}};
    const double jump = cdf_eval(f, 1.0 + 1e-12) - cdf_eval(f, 1.0 - 1e-12);
    CHECK(std::fabs(jump) < 1e-9);
    SubstreamRng rng = SubstreamRng::for_path(17, 3);
    int exactly_one = 0;
    for (int i = 0; i < 5000; ++i) {
        double u = rng.uniform01();
        while (u <= 0.0) u = rng.uniform01();
        if (inv_sample(f, u) == 1.0) ++exactly_one;
    }
    // Frequency must match the jump mass (zero) within 3 SE; with zero mass
    // that means no exact hits beyond rounding flukes.
    CHECK(exactly_one <= 1);
}

TEST_CASE("support map") {
    const auto r = support_map(0.2, 0.5);
    CHECK(!r.feasible);  // max(a^(1/a), a^(1/b)) = 0.04 > 0.03125 = min(...)
    CHECK(r.lo == doctest::Approx(0.04).epsilon(1e-12));
    CHECK(r.hi == doctest::Approx(0.03125).epsilon(1e-12));
    // Equivalent necessary condition from the bounds: a^a <= b^b fails.
    CHECK(std::pow(0.2, 0.2) > std::pow(0.5, 0.5));

    const auto one = support_map(1.0, 1.0);
    CHECK(one.lo == 1.0);
    CHECK(one.hi == 1.0);
    CHECK(one.feasible);

    // Bounded towers force the base below e^(1/e).
    for (double a : {0.1, 0.5, 1.0, 2.0}) {
        for (double b : {2.0, 5.0, 100.0}) {
            if (a > b) continue;
            const auto m = support_map(a, b);
            CHECK(m.hi <= std::exp(1.0 / kE) + 1e-12);
        }
    }

    CHECK_THROWS_AS(support_map(0.0, 1.0), DegenerateCase);
    const auto zero_a = support_map(0.0, 0.5);
    CHECK(zero_a.lo == 0.0);
    CHECK(zero_a.feasible);
}

TEST_CASE("example-2 sampler matches its closed-form law") {
    SubstreamRng rng = SubstreamRng::for_path(112233, 0);
    std::vector<double> xs;
    xs.reserve(20000);
    for (int i = 0; i < 20000; ++i) {
        const double v = example2_sampler(0.5, rng);
        CHECK(v > 0.0);
        CHECK(v < 1.0);
        xs.push_back(v);
    }
    // CDF x^2 (1 - ln x) for r = 1/2, the same law as the inverse tower CDF.
    const auto ks = stats::ks_one_sample(
        xs, [](double x) { return x <= 0.0 ? 0.0 : (x >= 1.0 ? 1.0 : x * x * (1.0 - std::log(x))); });
    CHECK(ks.p_value > 0.01);
    CHECK_THROWS_AS(example2_sampler(1.0, rng), DomainError);
}
