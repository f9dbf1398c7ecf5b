// Copyright 2026 the towerlab authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "towerlab/constants.hpp"
#include "towerlab/errors.hpp"
#include "towerlab/special.hpp"

using towerlab::g_boundary;
using towerlab::kE;
using towerlab::kEToMinusE;
using towerlab::lambert_w0;
using towerlab::tower_limit_c;

TEST_CASE("lambert_w0 anchor values") {
    CHECK(lambert_w0(0.0).value == 0.0);
    CHECK(lambert_w0(-1.0 / kE).value == -1.0);
    CHECK(lambert_w0(kE).value == doctest::Approx(1.0).epsilon(1e-14));
    // Inputs just below the branch point clamp onto it.
    CHECK(lambert_w0(-1.0 / kE - 5e-16).value == -1.0);
    CHECK_THROWS_AS(lambert_w0(-1.0 / kE - 1e-12), towerlab::DomainError);
}

TEST_CASE("lambert_w0 residual and monotonicity along a log-spaced grid") {
    double prev = -1.0;
    // Sweep from the branch point to 1e6: w e^w = x must hold to
    // 1e-12 * max(1, |x|) and w must be nondecreasing.
    for (int i = 0; i <= 400; ++i) {
        const double t = static_cast<double>(i) / 400.0;
        // Grid accumulates near the branch point and stretches to 1e6.
        const double x = -1.0 / kE + (1e6 + 1.0 / kE) * std::pow(t, 6.0);
        const auto w = lambert_w0(x);
        CHECK(w.residual <= 1e-12 * std::max(1.0, std::fabs(x)));
        CHECK(w.value >= prev - 1e-15);
        CHECK(w.value >= -1.0);
        prev = w.value;
    }
}

TEST_CASE("tower_limit_c anchors and fixed-point residual") {
    CHECK(tower_limit_c(1.0) == 1.0);
    CHECK(tower_limit_c(kEToMinusE) == doctest::Approx(1.0 / kE).epsilon(1e-13));

    // Fixed-point iteration of t -> 0.5^t as an independent oracle (the
    // fixed point attracts for x > e^-e).
    double t = 0.5;
    for (int i = 0; i < 500; ++i) t = std::pow(0.5, t);
    CHECK(tower_limit_c(0.5) == doctest::Approx(t).epsilon(1e-12));
    CHECK(tower_limit_c(0.5) == doctest::Approx(0.641186).epsilon(1e-6));

    double prev = 0.0;
    for (int i = 1; i <= 300; ++i) {
        const double x = static_cast<double>(i) / 300.0;
        const double c = tower_limit_c(x);
        CHECK(std::fabs(c - std::pow(x, c)) <= 1e-12);
        CHECK(c >= prev);  // monotone increasing in x
        prev = c;
    }
    CHECK_THROWS_AS(tower_limit_c(0.0), towerlab::DomainError);
    CHECK_THROWS_AS(tower_limit_c(1.5), towerlab::DomainError);
}

TEST_CASE("g_boundary anchors") {
    CHECK(g_boundary(0.5) == 0.5);  // identity branch
    CHECK(g_boundary(kEToMinusE) == doctest::Approx(kEToMinusE).epsilon(1e-12));
    const double g = g_boundary(0.04);
    CHECK(g > 0.0);
    CHECK(g < 0.04);
    CHECK_THROWS_AS(g_boundary(0.0), towerlab::DomainError);
    CHECK_THROWS_AS(g_boundary(1.1), towerlab::DomainError);
}

TEST_CASE("g_boundary stays below the identity on (0, 1]") {
    for (int i = 1; i <= 200; ++i) {
        const double x = static_cast<double>(i) / 200.0;
        CHECK(g_boundary(x) <= x + 1e-15);
    }
}

TEST_CASE("g_boundary is continuous across e^-e") {
    const double below = g_boundary(kEToMinusE * (1.0 - 1e-9));
    const double above = g_boundary(kEToMinusE * (1.0 + 1e-9));
    CHECK(std::fabs(below - above) < 1e-5);
}
