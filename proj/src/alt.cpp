// Copyright 2026 the towerlab authors
// SPDX-License-Identifier: Apache-2.0

#include "towerlab/alt.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "towerlab/errors.hpp"

namespace towerlab::alt {

namespace {

void check_unit_box(double x, double y) {
    if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0)) {
        throw DomainError("alternating tower bases must lie in [0, 1]");
    }
}

double alt_map(double x, double y, double t) {
    return std::pow(x, std::pow(y, t));
}

// d/dt x^(y^t) = ln(x) ln(y) x^(y^t) y^t
double alt_map_slope(double x, double y, double t) {
    const double yt = std::pow(y, t);
    return std::log(x) * std::log(y) * std::pow(x, yt) * yt;
}

}  // namespace

double at_n(double x, double y, int n) {
    check_unit_box(x, y);
    if (n < 0) throw DomainError("at_n: height must be nonnegative");
    double t = 1.0;
    for (int i = n; i >= 1; --i) {
        t = std::pow(i % 2 == 1 ? x : y, t);
    }
    return t;
}

AtLimits at_limits(double x, double y, double tol) {
    check_unit_box(x, y);
    if (!(x > 0.0 && y > 0.0)) throw DomainError("at_limits: bases must be positive");
    if (!(tol > 0.0)) throw DomainError("at_limits: tol must be positive");

    constexpr long kMaxIter = 1'000'000;
    // u_k = at_k(x, y), v_k = at_k(y, x); u_k = x^(v_{k-1}), v_k = y^(u_{k-1}).
    double u = 1.0, v = 1.0;
    double even = 1.0, odd = 0.0;
    bool even_done = false, odd_done = false;
    long k = 0;
    while (k < kMaxIter && !(even_done && odd_done)) {
        ++k;
        const double un = std::pow(x, v);
        const double vn = std::pow(y, u);
        u = un;
        v = vn;
        if (k % 2 == 0) {
            if (k > 2 && std::fabs(u - even) < tol) even_done = true;
            even = u;
        } else {
            if (k > 2 && std::fabs(u - odd) < tol) odd_done = true;
            odd = u;
        }
    }
    if (!(even_done && odd_done)) {
        throw ConvergenceError("at_limits: subsequences failed to stabilize");
    }
    return {even, odd, k, std::fabs(alt_map(x, y, even) - even),
            std::fabs(alt_map(x, y, odd) - odd)};
}

AltFixedPoints fixed_point_triple(double x, double y) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError("fixed_point_triple: x must be in (0, 1)");
    if (!(y > 0.0 && y <= 1.0)) throw DomainError("fixed_point_triple: y must be in (0, 1]");

    constexpr int kGrid = 10'000;
    constexpr double kTangencyTol = 1e-9;

    const auto h = [&](double t) { return t - alt_map(x, y, t); };
    const auto hp = [&](double t) { return 1.0 - alt_map_slope(x, y, t); };

    long iterations = 0;
    const auto bisect = [&iterations](auto f, double lo, double hi) {
        double flo = f(lo);
        for (int i = 0; i < 60 && hi - lo > 1e-13; ++i) {
            ++iterations;
            const double mid = 0.5 * (lo + hi);
            const double fm = f(mid);
            if ((flo < 0.0) == (fm < 0.0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    };

    std::vector<double> roots;
    double prev_h = h(0.0);
    double prev_hp = hp(0.0);
    bool tangency = false;
    for (int i = 1; i <= kGrid; ++i) {
        const double t = static_cast<double>(i) / kGrid;
        const double cur_h = h(t);
        const double cur_hp = hp(t);
        const double t0 = static_cast<double>(i - 1) / kGrid;
        if ((prev_h < 0.0) != (cur_h < 0.0)) {
            roots.push_back(bisect(h, t0, t));
        }
        if ((prev_hp < 0.0) != (cur_hp < 0.0)) {
            // Critical point of h; a near-zero value there is a double root.
            const double tc = bisect(hp, t0, t);
            if (std::fabs(h(tc)) < kTangencyTol) {
                roots.push_back(tc);
                tangency = true;
            }
        }
        prev_h = cur_h;
        prev_hp = cur_hp;
    }
    if (roots.empty()) {
        // t -> x^(y^t) maps [0,1] into itself, so a fixed point always exists;
        // an empty scan can only mean a whole-grid tangency. Fall back to the
        // minimiser of |h|.
        double best = 0.0, best_v = std::fabs(h(0.0));
        for (int i = 1; i <= kGrid; ++i) {
            const double t = static_cast<double>(i) / kGrid;
            if (std::fabs(h(t)) < best_v) {
                best = t;
                best_v = std::fabs(h(t));
            }
        }
        roots.push_back(best);
        tangency = true;
    }
    std::sort(roots.begin(), roots.end());
    std::vector<double> unique_roots;
    for (double r : roots) {
        if (unique_roots.empty() || r - unique_roots.back() > 1e-9) unique_roots.push_back(r);
    }

    AltFixedPoints out;
    out.at_o = unique_roots.front();
    out.at_e = unique_roots.back();
    out.c_mid = unique_roots.size() == 3 ? std::optional<double>(unique_roots[1]) : std::nullopt;
    out.iterations = iterations;
    out.tangency = tangency;
    out.residual = 0.0;
    for (double r : unique_roots) {
        out.residual = std::max(out.residual, std::fabs(h(r)));
    }
    return out;
}

std::pair<double, double> tangency_residuals(double x, double y, double t) {
    const double r1 = alt_map(x, y, t) - t;
    const double r2 = alt_map_slope(x, y, t) - 1.0;
    return {r1, r2};
}

double g_boundary_oracle(double x) {
    if (!(x > 0.0) || x > 1.0) throw DomainError("g_boundary_oracle: x must be in (0, 1]");
    // Predicate P(y): at_o(x, y) <= at_e(y, x). Via the cross relation
    // at_e(y, x) = y^(at_o(x, y)) this is at_o(x, y) <= y^(at_o(x, y)),
    // which is stable to evaluate. P is false at y = 0, true at y = 1, and
    // flips exactly at the boundary.
    //
    // The iteration here runs capped without throwing: probes next to the
    // tangency stall below the limit, and a stalled iterate still decides
    // the predicate the same way.
    const auto predicate = [&](double y) {
        double u = 1.0, v = 1.0, odd = 0.0, prev_odd = -1.0;
        for (long k = 1; k <= 1'000'000; ++k) {
            const double un = std::pow(x, v);
            const double vn = std::pow(y, u);
            u = un;
            v = vn;
            if (k % 2 == 1) {
                if (std::fabs(u - prev_odd) < 1e-10) break;
                prev_odd = odd = u;
            }
        }
        return odd <= std::pow(y, odd);
    };
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        if (predicate(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace towerlab::alt
