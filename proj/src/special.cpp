// Copyright 2026 the towerlab authors
// SPDX-License-Identifier: Apache-2.0

#include "towerlab/special.hpp"

#include <algorithm>
#include <cmath>

#include "towerlab/constants.hpp"
#include "towerlab/errors.hpp"

namespace towerlab {

namespace {

const double kBranchPoint = -1.0 / kE;

double initial_guess(double x) {
    if (x < -0.3) {
        // Series about the branch point in p = sqrt(2(1 + e x)).
        const double p = std::sqrt(2.0 * (1.0 + kE * x));
        return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 - p * 43.0 / 540.0)));
    }
    if (x <= 1.0) {
        // Rational fit in sqrt(2 + 2 e x), accurate on [-1/e, 1].
        const double sqrt2 = std::sqrt(2.0);
        const double sqeta = std::sqrt(2.0 + 2.0 * kE * x);
        const double n2 =
            3.0 * sqrt2 + 6.0 -
            (((2237.0 + 1457.0 * sqrt2) * kE - 4108.0 * sqrt2 - 5764.0) * sqeta) /
                ((215.0 + 199.0 * sqrt2) * kE - 430.0 * sqrt2 - 796.0);
        const double n1 = (1.0 - 1.0 / sqrt2) * (n2 + sqrt2);
        return -1.0 + sqeta / (1.0 + n1 * sqeta / (n2 + sqeta));
    }
    if (x <= 3.0) {
        return 0.567 + 0.44 * std::log(x);  // rough log fit, Halley polishes
    }
    const double l = std::log(x);
    const double ll = std::log(l);
    return l - ll + ll / l;
}

}  // namespace

WResult lambert_w0(double x) {
    if (std::isnan(x) || x < kBranchPoint - 1e-15) {
        throw DomainError("lambert_w0: argument below -1/e");
    }
    x = std::max(x, kBranchPoint);
    if (x == kBranchPoint) return {-1.0, 0.0};
    if (x == 0.0) return {0.0, 0.0};

    double w = initial_guess(x);
    const double tol = 1e-14 * std::max(1.0, std::fabs(x));
    double f = w * std::exp(w) - x;
    for (int i = 0; i < 50 && std::fabs(f) > tol; ++i) {
        const double ew = std::exp(w);
        const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        if (!std::isfinite(denom) || denom == 0.0) break;
        const double step = f / denom;
        w -= step;
        if (w <= -1.0) w = -1.0 + 1e-16;  // stay inside the principal branch
        f = w * std::exp(w) - x;
        if (std::fabs(step) < 1e-17 * std::max(1.0, std::fabs(w))) break;
    }
    return {w, std::fabs(f)};
}

double tower_limit_c(double x) {
    if (!(x > 0.0) || x > 1.0) throw DomainError("tower_limit_c: x must be in (0, 1]");
    if (x == 1.0) return 1.0;
    const double l = -std::log(x);
    return lambert_w0(l).value / l;
}

double g_boundary(double x) {
    if (!(x > 0.0) || x > 1.0) throw DomainError("g_boundary: x must be in (0, 1]");
    if (x >= kEToMinusE) return x;
    const double w = lambert_w0(1.0 / std::log(x)).value;
    return std::exp(w * std::exp(-1.0 / w));
}

}  // namespace towerlab
