// Copyright 2026 the towerlab authors
// SPDX-License-Identifier: Apache-2.0

#include "towerlab/stats.hpp"

#include <algorithm>
#include <cmath>

#include "towerlab/errors.hpp"

namespace towerlab::stats {

namespace {
constexpr std::size_t kMinSamples = 8;

double p_from(double d, double n_eff) {
    const double rn = std::sqrt(n_eff);
    const double lambda = (rn + 0.12 + 0.11 / rn) * d;
    return kolmogorov_q(lambda);
}
}  // namespace

EmpiricalCDF::EmpiricalCDF(std::vector<double> samples) : sorted_(std::move(samples)) {
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCDF::operator()(double x) const {
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double kolmogorov_q(double lambda) {
    if (lambda < 0.2) return 1.0;  // series resolution limit; Q is 1 to >1e-15 here
    double q = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        q += 2.0 * sign * term;
        sign = -sign;
        if (term < 1e-18) break;
    }
    return std::clamp(q, 0.0, 1.0);
}

KSResult ks_one_sample(const std::vector<double>& samples,
                       const std::function<double(double)>& cdf) {
    if (samples.size() < kMinSamples) {
        throw InsufficientSamples("ks_one_sample: need at least 8 samples");
    }
    std::vector<double> xs(samples);
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        const double hi = (static_cast<double>(i) + 1.0) / n - f;
        const double lo = f - static_cast<double>(i) / n;
        d = std::max(d, std::max(hi, lo));
    }
    return {d, p_from(d, n), n};
}

KSResult ks_two_sample(const std::vector<double>& xs_in, const std::vector<double>& ys_in) {
    if (xs_in.size() < kMinSamples || ys_in.size() < kMinSamples) {
        throw InsufficientSamples("ks_two_sample: need at least 8 samples on each side");
    }
    std::vector<double> xs(xs_in), ys(ys_in);
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    const double n = static_cast<double>(xs.size());
    const double m = static_cast<double>(ys.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < xs.size() && j < ys.size()) {
        const double v = std::min(xs[i], ys[j]);
        while (i < xs.size() && xs[i] <= v) ++i;  // absorb ties on both sides
        while (j < ys.size() && ys[j] <= v) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / n - static_cast<double>(j) / m));
    }
    const double n_eff = n * m / (n + m);
    return {d, p_from(d, n_eff), n_eff};
}

}  // namespace towerlab::stats
