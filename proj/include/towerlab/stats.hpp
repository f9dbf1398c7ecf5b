// Copyright 2026 the towerlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOWERLAB_STATS_HPP_
#define TOWERLAB_STATS_HPP_

#include <functional>
#include <vector>

namespace towerlab::stats {

/// Right-continuous empirical CDF over a sorted copy of the samples.
class EmpiricalCDF {
  public:
    explicit EmpiricalCDF(std::vector<double> samples);

    double operator()(double x) const;
    std::size_t size() const { return sorted_.size(); }
    const std::vector<double>& sorted_samples() const { return sorted_; }

  private:
    std::vector<double> sorted_;
};

struct KSResult {
    double statistic;    // D in [0, 1]
    double p_value;      // asymptotic, Kolmogorov series
    double n_effective;  // n, or n*m/(n+m) for two samples
};

/// One-sample KS test of the samples against a nondecreasing CDF into [0, 1].
/// Needs at least 8 samples. Ties follow the right-continuous convention.
KSResult ks_one_sample(const std::vector<double>& samples,
                       const std::function<double(double)>& cdf);

/// Classical two-sample KS test; both sides need at least 8 samples.
KSResult ks_two_sample(const std::vector<double>& xs, const std::vector<double>& ys);

/// Survival function of the Kolmogorov distribution at lambda,
/// 2 sum_k (-1)^(k-1) exp(-2 k^2 lambda^2), truncated at 100 terms.
double kolmogorov_q(double lambda);

}  // namespace towerlab::stats

#endif  // TOWERLAB_STATS_HPP_
