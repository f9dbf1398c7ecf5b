// Copyright 2026 the towerlab authors
// SPDX-License-Identifier: Apache-2.0

#include "towerlab/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "towerlab/constants.hpp"
#include "towerlab/errors.hpp"
#include "towerlab/special.hpp"

namespace towerlab::classify {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

Verdict make(Outcome o, std::string rule, std::string detail) {
    return {o, std::move(rule), std::move(detail)};
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}
}  // namespace

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::kConvergesAS:
            return "ConvergesAS";
        case Outcome::kDivergesToInfinityAS:
            return "DivergesToInfinityAS";
        case Outcome::kDivergesByOscillation:
            return "DivergesByOscillation";
        case Outcome::kIndeterminate:
            return "Indeterminate";
    }
    return "?";
}

Verdict classify_bounds(const SupportBounds& sb, const TailCondition& tail) {
    const double a = sb.a;
    const double b = sb.b;
    if (std::isnan(a) || std::isnan(b) || a > b || !(b > 0.0) || a < 0.0) {
        throw InvalidBounds("classify_bounds: need 0 <= a <= b, b > 0");
    }

    if (a == 0.0) {
        return make(Outcome::kConvergesAS, "Cor-conv-1", "a = 0");
    }
    if (b >= kEToMinusE && b <= kEToInvE) {
        if (a >= 1.0) {
            return make(Outcome::kConvergesAS, "Thm1-case1",
                        "[a,b] within [1, e^(1/e) ~ " + fmt(kEToInvE) + "]");
        }
        return make(Outcome::kConvergesAS, "Cor-conv-2",
                    "b in [e^-e, e^(1/e)] = [" + fmt(kEToMinusE) + ", " + fmt(kEToInvE) + "]");
    }
    if (a < 1.0 && b >= 1.0) {
        return make(Outcome::kConvergesAS, "Cor-conv-3", "a < 1 <= b");
    }
    if (b <= 1.0) {
        // Reaching here means b < e^-e (the band [e^-e, 1] was handled above).
        const double g = g_boundary(b);
        if (a < g) {
            return make(Outcome::kConvergesAS, "Thm1-case3",
                        "a = " + fmt(a) + " < G(b) = " + fmt(g));
        }
        return make(Outcome::kDivergesByOscillation, "Thm1-case3",
                    "a = " + fmt(a) + " >= G(b) = " + fmt(g));
    }
    // From here: a >= 1 and b > e^(1/e).
    if (a > 1.0) {
        return make(Outcome::kDivergesToInfinityAS, "Cor-div-1", "a > 1 and b > e^(1/e)");
    }
    if (std::isinf(b)) {
        return make(Outcome::kIndeterminate, "outside-theorem",
                    "a = 1 and b = inf: bounds do not decide convergence");
    }
    // a == 1, b finite: the tail near 1 decides.
    if (std::holds_alternative<UnknownTail>(tail)) {
        return make(Outcome::kIndeterminate, "Thm1-case2",
                    "a = 1, b in (e^(1/e), inf): tail condition required but unknown");
    }
    if (std::holds_alternative<FiniteLogStarMoment>(tail)) {
        return make(Outcome::kDivergesToInfinityAS, "Cor-div-3",
                    "E[log*(1/(A-1))] declared finite");
    }
    if (const auto* frac = std::get_if<InfiniteFractionalMoment>(&tail)) {
        if (!(frac->alpha > 0.0 && frac->alpha < 1.0)) {
            throw DomainError("InfiniteFractionalMoment: alpha must be in (0, 1)");
        }
        return make(Outcome::kConvergesAS, "Cor-conv-5",
                    "E[(log*(1/(A-1)))^alpha] = inf with alpha = " + fmt(frac->alpha));
    }
    SeriesResult sr = stopping_time_series(std::get<TailSequence>(tail));
    return sr.verdict;
}

SeriesResult stopping_time_series(const TailSequence& tail, long n_max) {
    if (n_max < 1) throw DomainError("stopping_time_series: n_max must be >= 1");

    // Partial sums of E[N] = sum_k prod_{j<k} (1 - q(j)), products in log space.
    // Terms are nonincreasing, so once a term falls below 1e-12 / n_max the
    // whole remaining tail is below 1e-12 and the sum has stabilized.
    SeriesResult out;
    out.partial_sums.reserve(1024);
    const double term_floor = 1e-12 / static_cast<double>(n_max);

    double log_prod = 0.0;  // log prod_{j<k} (1 - q(j))
    double sum = 0.0;
    std::vector<double> qs;
    qs.reserve(1024);

    // Geometric-envelope detector for sum q(j) < inf: a trailing run where
    // q(j+1) <= rho * q(j) with the run's head already small.
    constexpr double kRho = 0.95;
    constexpr int kRunLen = 50;
    int run = 0;
    bool q_summable = false;
    double q_sum = 0.0;

    for (long k = 1; k <= n_max; ++k) {
        const double term = std::exp(log_prod);
        sum += term;
        out.partial_sums.push_back(sum);
        if (term < term_floor) {
            out.verdict = make(Outcome::kConvergesAS, "Cor-conv-5",
                               "stopping-time series stabilized: E[N] ~ " + fmt(sum) +
                                   " after " + std::to_string(k) + " terms");
            out.expectation_estimate = sum;
            return out;
        }
        double qk = tail.q(k);
        if (std::isnan(qk) || qk < -1e-12 || qk > 1.0 + 1e-12) {
            throw DomainError("stopping_time_series: q(n) must lie in [0, 1]");
        }
        qk = std::clamp(qk, 0.0, 1.0);
        if (!qs.empty() && qk > qs.back() + 1e-12) {
            throw DomainError("stopping_time_series: q must be nonincreasing");
        }
        qs.push_back(qk);
        q_sum += qk;
        if (qs.size() >= 2) {
            const double prev = qs[qs.size() - 2];
            if (qk <= kRho * prev && prev < 1e-3) {
                if (++run >= kRunLen) q_summable = true;
            } else {
                run = 0;
            }
        }
        log_prod += qk >= 1.0 ? -kInf : std::log1p(-qk);
        if (q_summable) break;
    }

    out.expectation_estimate = sum;
    if (q_summable) {
        // Tail of sum q bounded by the geometric envelope, so the product
        // prod (1 - q(j)) stays above a positive constant and E[N] = inf.
        const double tail_bound = qs.back() * kRho / (1.0 - kRho);
        out.verdict =
            make(Outcome::kDivergesToInfinityAS, "Cor-div-3",
                 "sum q(j) <= " + fmt(q_sum + tail_bound) + " < inf (geometric envelope); "
                 "product of (1-q) bounded below, E[N] = inf");
        return out;
    }
    out.verdict = make(Outcome::kIndeterminate, "Thm1-case2",
                       "series neither stabilized nor product bounded below within " +
                           std::to_string(n_max) + " terms");
    return out;
}

TailSequence tail_sequence_for(const DistributionSpec& dist) {
    const SupportBounds sb = dist.support();
    if (sb.a < 1.0) {
        throw UnsupportedDistribution("tail_sequence_for: inf of support must be >= 1");
    }
    if (const auto* t = std::get_if<LogStarTail>(&dist.family)) {
        LogStarTail copy = *t;
        return TailSequence{[copy](long n) { return copy.q(n); }};
    }
    if (const auto* u = std::get_if<Uniform>(&dist.family)) {
        // q(n) = P(A <= e^(1/tetrate(e, n))) = ((thr - 1) - (lo - 1)) / width,
        // with thr - 1 = expm1(1/tetrate(e, n)) so nothing cancels for n >= 3.
        const double width = u->hi - u->lo;
        const double lo_off = u->lo - 1.0;
        return TailSequence{[width, lo_off](long n) {
            const LevelIndex t = tetrate(kE, static_cast<int>(std::min<long>(n, 8)));
            const double inv = t.fits_double() ? 1.0 / t.to_double() : 0.0;
            const double eps = std::expm1(inv) - lo_off;
            return std::clamp(eps / width, 0.0, 1.0);
        }};
    }
    if (const auto* pm = std::get_if<PointMasses>(&dist.family)) {
        auto atoms = pm->atoms;
        return TailSequence{[atoms](long n) {
            const LevelIndex t = tetrate(kE, static_cast<int>(std::min<long>(n, 8)));
            const double inv = t.fits_double() ? 1.0 / t.to_double() : 0.0;
            const double thr = inv == 0.0 ? 1.0 : std::exp(inv);
            double acc = 0.0;
            for (const auto& a : atoms) {
                if (a.value <= thr) acc += a.prob;
            }
            return acc;
        }};
    }
    throw UnsupportedDistribution("tail_sequence_for: no analytic near-one tail model for " +
                                  dist.family_name());
}

}  // namespace towerlab::classify
