// Copyright 2026 the towerlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOWERLAB_ALT_HPP_
#define TOWERLAB_ALT_HPP_

#include <optional>
#include <utility>

namespace towerlab::alt {

/// Alternating tower of height n with outermost base x: x^(y^(x^(...))).
/// at_n(x, y, 0) == 1 (empty tower); 0^0 is taken as 1.
double at_n(double x, double y, int n);

struct AtLimits {
    double at_e;  // limit of the even (nonincreasing) subsequence
    double at_o;  // limit of the odd (nondecreasing) subsequence
    long iterations;
    double residual_e;  // |x^(y^at_e) - at_e|
    double residual_o;
};

/// Limits of the even/odd subsequences of at_n(x, y, .), iterated until
/// successive same-parity terms differ by less than tol (cap 10^6).
AtLimits at_limits(double x, double y, double tol);

struct AltFixedPoints {
    double at_o;                  // smallest fixed point of t -> x^(y^t)
    std::optional<double> c_mid;  // middle fixed point, when three exist
    double at_e;                  // largest fixed point
    long iterations;
    double residual;  // max |x^(y^t) - t| over the reported points
    bool tangency;    // a double root was detected (boundary case)
};

/// All fixed points of t -> x^(y^t) in [0, 1]: sign-change bisection on a
/// 10^4-point grid, plus detection of tangent (double) roots via the zero of
/// the map's derivative.
AltFixedPoints fixed_point_triple(double x, double y);

/// Residuals of the tangency system at (x, y, t): first the fixed-point
/// equation x^(y^t) - t, then the unit-slope condition
/// ln(x) ln(y) x^(y^t) y^t - 1.
std::pair<double, double> tangency_residuals(double x, double y, double t);

/// Independent oracle for g_boundary: bisection on y of the predicate
/// "smallest fixed point of t -> x^(y^t) lies below the tower limit of y",
/// resolved to 1e-8.
double g_boundary_oracle(double x);

}  // namespace towerlab::alt

#endif  // TOWERLAB_ALT_HPP_
