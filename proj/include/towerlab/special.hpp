// Copyright 2026 the towerlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOWERLAB_SPECIAL_HPP_
#define TOWERLAB_SPECIAL_HPP_

namespace towerlab {

enum class WBranch { kPrincipal };

struct WResult {
    double value;
    double residual;  // |w*e^w - x|
    WBranch branch = WBranch::kPrincipal;
};

/// Principal branch of the Lambert-W function on [-1/e, inf).
/// Halley iteration from a piecewise initial guess; inputs within 1e-15 of
/// the branch point are clamped onto it.
WResult lambert_w0(double x);

/// Value of the infinite deterministic tower x^(x^(...)) for x in (0, 1]:
/// the unique real solution of C = x^C, computed as W(-ln x)/(-ln x).
double tower_limit_c(double x);

/// Boundary separating almost-sure convergence from oscillation for support
/// inside (0, 1]: identity for x >= e^(-e), a Lambert-W expression below it.
double g_boundary(double x);

}  // namespace towerlab

#endif  // TOWERLAB_SPECIAL_HPP_
