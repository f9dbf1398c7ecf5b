// Copyright 2026 the towerlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOWERLAB_INVTOWER_HPP_
#define TOWERLAB_INVTOWER_HPP_

#include <string>
#include <vector>

#include "towerlab/rng.hpp"

namespace towerlab::invtower {

/// Parameters for the inverse tower distribution of T = U^r, U ~ Unif[alpha, beta].
struct InvTowerParams {
    double alpha = 0.0;
    double beta = 1.0;
    double r = 1.0;

    // Derived: T has density proportional to x^(p-1) on (a, b).
    double a() const;  // alpha^r
    double b() const;  // beta^r
    double p() const;  // 1/r
};

struct Feasibility {
    bool feasible;
    std::string reason;  // the violated condition, or "ok"
};

/// Feasible iff 1 lies in [alpha, beta] and r in [0, 1/(1+ln beta)].
/// r = 0 (T degenerate at 1) is accepted; the p = 0 construction (exp of a
/// uniform) is rejected with a dedicated reason.
Feasibility feasibility(const InvTowerParams& params);

/// The recursive inverse-tower CDF.
struct InvTowerCDF {
    InvTowerParams params;
    double truncation_tol = 1e-14;

    double support_lo() const;  // alpha^(r/beta^r)
    double support_hi() const;  // beta^(r/beta^r)
};

/// F(x) for feasible parameters; 0 below the support, 1 at and above its top,
/// (1-a^p)/(b^p-a^p) at x = 1, else the recursion unrolled until the argument
/// leaves the support or the accumulated coefficient drops below the
/// truncation tolerance.
double cdf_eval(const InvTowerCDF& cdf, double x);

/// Number of recursion steps cdf_eval takes at x (instrumentation).
int cdf_recursion_depth(const InvTowerCDF& cdf, double x);

struct AuditViolation {
    double x_lo, x_hi;
    double f_lo, f_hi;
};

/// Scans F on a grid over the support and reports adjacent decreasing pairs.
/// Runs for any syntactically valid parameters (the point is to expose the
/// infeasible ones), so it bypasses the feasibility gate.
std::vector<AuditViolation> monotonicity_audit(const InvTowerCDF& cdf, int grid_size);

/// Generalized inverse F^{-1}(u) by bisection to 1e-12; u falling in a jump
/// of F maps to the jump location exactly.
double inv_sample(const InvTowerCDF& cdf, double u);

struct SupportBoundsResult {
    double lo, hi;
    bool feasible;  // lo <= hi
};

/// Support bounds of the base law Y given the tower variable's support [a, b]:
/// [max(a^(1/a), a^(1/b)), min(b^(1/a), b^(1/b))], with a -> 0 limits.
/// Throws DegenerateCase for (a, b) = (0, 1).
SupportBoundsResult support_map(double a, double b);

/// One draw of max(V1^(r/(1-r)), V2*V3) with V_i independent Unif(0,1).
double example2_sampler(double r, SubstreamRng& rng);

}  // namespace towerlab::invtower

#endif  // TOWERLAB_INVTOWER_HPP_
