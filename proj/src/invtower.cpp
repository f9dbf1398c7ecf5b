// Copyright 2026 the towerlab authors
// SPDX-License-Identifier: Apache-2.0

#include "towerlab/invtower.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "towerlab/constants.hpp"
#include "towerlab/errors.hpp"

namespace towerlab::invtower {

namespace {

void check_syntactic(const InvTowerParams& p) {
    if (std::isnan(p.alpha) || std::isnan(p.beta) || std::isnan(p.r)) {
        throw DomainError("inverse tower parameters must not be NaN");
    }
    if (!(p.alpha >= 0.0) || !(p.beta > p.alpha)) {
        throw DomainError("inverse tower parameters require 0 <= alpha < beta");
    }
}

// Unchecked recursive evaluation; valid for any 0 <= alpha < beta, r > 0.
double eval_raw(const InvTowerCDF& cdf, double x, int* steps_out) {
    const double a = cdf.params.a();
    const double b = cdf.params.b();
    const double p = cdf.params.p();
    const double lo = cdf.support_lo();
    const double hi = cdf.support_hi();
    const double ratio_pow = a == 0.0 ? 0.0 : std::pow(a / b, p);  // recursion coefficient
    const double bp = std::pow(b, p);

    double acc = 0.0;
    double coef = 1.0;
    int steps = 0;
    while (true) {
        ++steps;
        if (!(x >= lo) || x <= 0.0) break;  // F = 0 region ends the tail
        if (x >= hi) {
            acc += coef;
            break;
        }
        if (x == 1.0) {
            const double ap = std::pow(a, p);
            acc += coef * (1.0 - ap) / (bp - ap);
            break;
        }
        acc += coef * (std::pow(x, b * p) / bp * (1.0 - b * std::log(x)) - ratio_pow);
        coef *= ratio_pow;
        if (coef < cdf.truncation_tol) break;  // remaining tail bounded by coef
        x = std::pow(x, b / a);
    }
    if (steps_out != nullptr) *steps_out = steps;
    return acc;
}

double eval_clamped(const InvTowerCDF& cdf, double x, int* steps_out = nullptr) {
    if (cdf.params.r == 0.0) {
        if (steps_out != nullptr) *steps_out = 1;
        return x >= 1.0 ? 1.0 : 0.0;  // T degenerate at 1
    }
    return eval_raw(cdf, x, steps_out);
}

}  // namespace

double InvTowerParams::a() const {
    return std::pow(alpha, r);
}
double InvTowerParams::b() const {
    return std::pow(beta, r);
}
double InvTowerParams::p() const {
    return 1.0 / r;
}

Feasibility feasibility(const InvTowerParams& params) {
    check_syntactic(params);
    if (std::isinf(params.r)) {
        return {false, "p = 1/r = 0 (exponential of a uniform): no tower construction exists"};
    }
    if (params.alpha > 1.0 || params.beta < 1.0) {
        std::ostringstream os;
        os << "1 is outside [alpha, beta] = [" << params.alpha << ", " << params.beta << "]";
        return {false, os.str()};
    }
    if (params.r < 0.0) {
        return {false, "r is negative"};
    }
    const double bound = 1.0 / (1.0 + std::log(params.beta));
    if (params.r > bound) {
        std::ostringstream os;
        os << "r = " << params.r << " exceeds 1/(1+ln beta) = " << bound
           << " (equivalently beta^r > e)";
        return {false, os.str()};
    }
    return {true, "ok"};
}

double InvTowerCDF::support_lo() const {
    if (params.alpha == 0.0) return 0.0;
    return std::pow(params.alpha, params.r / params.b());
}

double InvTowerCDF::support_hi() const {
    return std::pow(params.beta, params.r / params.b());
}

double cdf_eval(const InvTowerCDF& cdf, double x) {
    const Feasibility f = feasibility(cdf.params);
    if (!f.feasible) throw InfeasibleParams("cdf_eval: " + f.reason);
    if (std::isnan(x)) throw DomainError("cdf_eval: x is NaN");
    const double v = eval_clamped(cdf, x);
    return std::clamp(v, 0.0, 1.0);
}

int cdf_recursion_depth(const InvTowerCDF& cdf, double x) {
    int steps = 0;
    eval_clamped(cdf, x, &steps);
    return steps;
}

std::vector<AuditViolation> monotonicity_audit(const InvTowerCDF& cdf, int grid_size) {
    check_syntactic(cdf.params);
    if (grid_size < 2) throw DomainError("monotonicity_audit: grid_size must be >= 2");
    if (!(cdf.params.r >= 0.0) || std::isinf(cdf.params.r)) {
        throw DomainError("monotonicity_audit: r must be finite and nonnegative");
    }
    const double lo = cdf.support_lo() * (1.0 - 1e-9);
    const double hi = cdf.support_hi();
    std::vector<AuditViolation> violations;
    double prev_x = lo;
    double prev_f = eval_clamped(cdf, lo);
    for (int i = 1; i < grid_size; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / (grid_size - 1);
        const double f = eval_clamped(cdf, x);
        if (f < prev_f - 1e-12) {
            violations.push_back({prev_x, x, prev_f, f});
        }
        prev_x = x;
        prev_f = f;
    }
    return violations;
}

double inv_sample(const InvTowerCDF& cdf, double u) {
    const Feasibility f = feasibility(cdf.params);
    if (!f.feasible) throw InfeasibleParams("inv_sample: " + f.reason);
    if (!(u > 0.0 && u < 1.0)) throw DomainError("inv_sample: u must be in (0, 1)");
    if (cdf.params.r == 0.0) return 1.0;

    // Smallest x with F(x) >= u.
    double lo = cdf.support_lo();
    double hi = cdf.support_hi();
    for (int i = 0; i < 100 && hi - lo > 1e-13; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (eval_clamped(cdf, mid) >= u) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    const double x = 0.5 * (lo + hi);
    // Values inside a jump of F land on the atom; snap the bisection output.
    if (std::fabs(x - 1.0) < 2e-12) return 1.0;
    return x;
}

SupportBoundsResult support_map(double a, double b) {
    if (!(a >= 0.0) || !(b >= a) || std::isinf(b)) {
        throw DomainError("support_map requires 0 <= a <= b < inf");
    }
    if (a == 0.0 && b == 1.0) {
        throw DegenerateCase("support_map: for (0, 1) only inf = 0 and sup <= 1 are known");
    }
    double lo, hi;
    if (a == 0.0) {
        // a^(1/a) -> 0 and b^(1/a) -> {0 if b<1, 1 if b=1, inf if b>1} as a -> 0+.
        lo = 0.0;
        const double b_pow_inv_a =
            b < 1.0 ? 0.0 : (b == 1.0 ? 1.0 : std::numeric_limits<double>::infinity());
        hi = std::min(b_pow_inv_a, std::pow(b, 1.0 / b));
    } else {
        lo = std::max(std::pow(a, 1.0 / a), std::pow(a, 1.0 / b));
        hi = std::min(std::pow(b, 1.0 / a), std::pow(b, 1.0 / b));
    }
    return {lo, hi, lo <= hi};
}

double example2_sampler(double r, SubstreamRng& rng) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("example2_sampler: r must be in (0, 1)");
    const double v1 = rng.uniform01();
    const double v2 = rng.uniform01();
    const double v3 = rng.uniform01();
    return std::max(std::pow(v1, r / (1.0 - r)), v2 * v3);
}

}  // namespace towerlab::invtower
