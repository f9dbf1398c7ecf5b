// Copyright 2026 the towerlab authors
// SPDX-License-Identifier: Apache-2.0

#include "towerlab/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "towerlab/constants.hpp"
#include "towerlab/errors.hpp"

namespace towerlab::sim {

namespace {

// Cached e-tetration ladder for threshold comparisons.
const LevelIndex& tetrate_e(int n) {
    static const std::vector<LevelIndex> ladder = [] {
        std::vector<LevelIndex> v;
        for (int i = 0; i <= LevelIndex::kMaxLevel + 2; ++i) v.push_back(tetrate(kE, i));
        return v;
    }();
    return ladder[std::min<int>(n, LevelIndex::kMaxLevel + 2)];
}

Draw near_one_draw(int level, double tail_u) {
    Draw d;
    d.near_one_level = level;
    d.tail_u = tail_u;
    const LevelIndex t = tetrate_e(level);
    d.value = t.fits_double() ? LevelIndex(std::exp(1.0 / t.to_double())) : LevelIndex(1.0);
    return d;
}

// Evaluates per-path work over [0, paths) into a vector, chunked across
// threads. Results depend only on (seed, path index), never on the schedule.
template <typename T, typename F>
std::vector<T> run_paths(int paths, int threads, F&& per_path) {
    std::vector<T> out(static_cast<std::size_t>(paths));
    threads = std::clamp(threads, 1, std::max(1, paths));
    if (threads == 1) {
        for (int i = 0; i < paths; ++i) out[static_cast<std::size_t>(i)] = per_path(i);
        return out;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    constexpr int kChunk = 64;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            while (true) {
                const int begin = next.fetch_add(kChunk);
                if (begin >= paths) break;
                const int end = std::min(paths, begin + kChunk);
                for (int i = begin; i < end; ++i) {
                    out[static_cast<std::size_t>(i)] = per_path(i);
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

double neumaier_sum(const std::vector<double>& xs) {
    double sum = 0.0, comp = 0.0;
    for (double x : xs) {
        const double t = sum + x;
        comp += std::fabs(sum) >= std::fabs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

GapStats gap_stats(std::vector<double> gaps) {
    GapStats s;
    if (gaps.empty()) return s;
    s.mean = neumaier_sum(gaps) / static_cast<double>(gaps.size());
    std::sort(gaps.begin(), gaps.end());
    const auto q = [&](double f) {
        const auto idx = static_cast<std::size_t>(f * (static_cast<double>(gaps.size()) - 1.0));
        return gaps[idx];
    };
    s.median = q(0.5);
    s.q10 = q(0.1);
    s.q90 = q(0.9);
    s.min = gaps.front();
    s.max = gaps.back();
    return s;
}

}  // namespace

Draw sample_a(const DistributionSpec& dist, SubstreamRng& rng) {
    return std::visit(
        [&rng](const auto& fam) -> Draw {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, Uniform>) {
                return {LevelIndex(fam.lo + (fam.hi - fam.lo) * rng.uniform01())};
            } else if constexpr (std::is_same_v<T, PointMasses>) {
                const double u = rng.uniform01();
                double acc = 0.0;
                for (const auto& a : fam.atoms) {
                    acc += a.prob;
                    if (u < acc) return {LevelIndex(a.value)};
                }
                return {LevelIndex(fam.atoms.back().value)};
            } else if constexpr (std::is_same_v<T, ProductUniform>) {
                const double u = rng.uniform01();
                const double v = rng.uniform01();
                return {LevelIndex(u * v)};
            } else if constexpr (std::is_same_v<T, MaxExample2>) {
                SubstreamRng& r = rng;
                return {LevelIndex(invtower::example2_sampler(fam.r, r))};
            } else if constexpr (std::is_same_v<T, InverseTowerSampler>) {
                invtower::InvTowerCDF f{fam.params};
                double u = rng.uniform01();
                while (u <= 0.0) u = rng.uniform01();
                return {LevelIndex(invtower::inv_sample(f, u))};
            } else if constexpr (std::is_same_v<T, LogStarTail>) {
                const double u = rng.uniform01();
                int level = 0;
                while (level < LevelIndex::kMaxLevel && u <= fam.q(level + 1)) ++level;
                return near_one_draw(level, u);
            } else {  // HeavyDemo
                const bool tetration_branch = rng.uniform01() < 0.5;
                int n = 1;
                while (rng.uniform01() < 0.5) ++n;
                if (tetration_branch) {
                    Draw d;
                    d.value = tetrate_e(n);
                    return d;
                }
                Draw d = near_one_draw(16 * n, std::numeric_limits<double>::quiet_NaN());
                return d;
            }
        },
        dist.family);
}

bool below_threshold(const DistributionSpec& dist, const Draw& draw, long n) {
    if (n < 1) throw DomainError("below_threshold: n must be >= 1");
    if (const auto* t = std::get_if<LogStarTail>(&dist.family);
        t != nullptr && !std::isnan(draw.tail_u)) {
        return draw.tail_u <= t->q(n);
    }
    if (draw.near_one_level >= 0) return draw.near_one_level >= n;
    if (!draw.value.fits_double()) return false;
    const double d = draw.value.to_double();
    if (d <= 1.0) return true;
    // A <= e^(1/tetrate(e,n))  <=>  1/ln(A) >= tetrate(e,n)
    const double v = 1.0 / std::log(d);
    return LevelIndex(v) >= tetrate_e(static_cast<int>(std::min<long>(n, LevelIndex::kMaxLevel + 2)));
}

std::vector<TowerSample> tower_forward(const DistributionSpec& dist, int depth,
                                       SubstreamRng& rng) {
    if (depth < 1) throw DomainError("tower_forward: depth must be >= 1");
    std::vector<TowerSample> out;
    out.reserve(static_cast<std::size_t>(depth));

    const auto* pm = std::get_if<PointMasses>(&dist.family);
    const bool deterministic = pm != nullptr && pm->atoms.size() == 1;

    std::vector<Draw> draws;
    if (!deterministic) {
        draws.reserve(static_cast<std::size_t>(depth));
        for (int i = 0; i < depth; ++i) draws.push_back(sample_a(dist, rng));
    }

    int overflow_run = 0;
    bool diverged = false;
    LevelIndex t(1.0);  // carries the iterate in the deterministic fast path
    for (int n = 1; n <= depth; ++n) {
        LevelIndex value;
        if (deterministic) {
            // All draws equal: T_n iterates c -> c^t with the same pow chain
            // the top-down evaluation would produce.
            t = li_pow(pm->atoms.front().value, t);
            value = t;
        } else {
            LevelIndex acc = draws[static_cast<std::size_t>(n - 1)].value;
            for (int k = n - 2; k >= 0; --k) {
                acc = li_pow(draws[static_cast<std::size_t>(k)].value, acc);
            }
            value = acc;
        }
        overflow_run = value.fits_double() ? 0 : overflow_run + 1;
        if (overflow_run >= 2) diverged = true;
        TowerSample s;
        s.depth_used = n;
        s.diverged = diverged;
        s.value = diverged ? LevelIndex::overflow() : value;
        out.push_back(s);
    }
    return out;
}

TowerSample tower_backward(const DistributionSpec& dist, int depth, SubstreamRng& rng) {
    if (depth < 1) throw DomainError("tower_backward: depth must be >= 1");
    LevelIndex s(1.0);
    int overflow_run = 0;
    bool diverged = false;
    for (int k = 1; k <= depth; ++k) {
        const Draw a = sample_a(dist, rng);
        s = li_pow(a.value, s);
        overflow_run = s.fits_double() ? 0 : overflow_run + 1;
        if (overflow_run >= 2) diverged = true;
    }
    return {diverged ? LevelIndex::overflow() : s, depth, diverged};
}

OscillationReport oscillation_gap(const DistributionSpec& dist, int depth, int paths,
                                  std::uint64_t seed, int threads) {
    if (dist.support().b > 1.0) {
        throw PreconditionError("oscillation_gap: sup(support) must be <= 1");
    }
    if (depth < 2) throw DomainError("oscillation_gap: depth must be >= 2");
    if (paths < 1) throw DomainError("oscillation_gap: paths must be >= 1");
    const int even_depth = depth % 2 == 0 ? depth : depth - 1;

    struct PathResult {
        double even, odd;
    };
    auto results = run_paths<PathResult>(paths, threads, [&](int idx) {
        SubstreamRng rng = SubstreamRng::for_path(seed, static_cast<std::uint64_t>(idx));
        std::vector<double> a(static_cast<std::size_t>(even_depth) + 1);
        for (auto& v : a) v = sample_a(dist, rng).value.to_double();
        const auto tower = [&a](int d) {
            double t = a[static_cast<std::size_t>(d - 1)];
            for (int k = d - 2; k >= 0; --k) t = std::pow(a[static_cast<std::size_t>(k)], t);
            return t;
        };
        return PathResult{tower(even_depth), tower(even_depth + 1)};
    });

    std::vector<double> evens, odds, gaps;
    evens.reserve(results.size());
    odds.reserve(results.size());
    gaps.reserve(results.size());
    for (const auto& r : results) {
        evens.push_back(r.even);
        odds.push_back(r.odd);
        gaps.push_back(r.even - r.odd);
    }
    OscillationReport rep;
    rep.paths = paths;
    rep.even_depth = even_depth;
    rep.even_limit_est = neumaier_sum(evens) / static_cast<double>(paths);
    rep.odd_limit_est = neumaier_sum(odds) / static_cast<double>(paths);
    rep.gap = rep.even_limit_est - rep.odd_limit_est;
    rep.per_path_gaps = gap_stats(std::move(gaps));
    return rep;
}

StoppingEstimate estimate_stopping_time(const DistributionSpec& dist, long n_cap, int paths,
                                        std::uint64_t seed, int threads) {
    if (dist.support().a != 1.0) {
        throw PreconditionError("estimate_stopping_time: inf(support) must be 1");
    }
    if (n_cap < 1) throw DomainError("estimate_stopping_time: n_cap must be >= 1");
    if (paths < 1) throw DomainError("estimate_stopping_time: paths must be >= 1");

    auto ns = run_paths<double>(paths, threads, [&](int idx) {
        SubstreamRng rng = SubstreamRng::for_path(seed, static_cast<std::uint64_t>(idx));
        for (long n = 1; n <= n_cap; ++n) {
            const Draw a = sample_a(dist, rng);
            if (below_threshold(dist, a, n)) return static_cast<double>(n);
        }
        return static_cast<double>(-n_cap);  // negative marks a censored path
    });

    long censored = 0;
    std::vector<double> clipped(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (ns[i] < 0.0) {
            ++censored;
            clipped[i] = static_cast<double>(n_cap);
        } else {
            clipped[i] = ns[i];
        }
    }
    StoppingEstimate est;
    est.paths = paths;
    est.censored_fraction = static_cast<double>(censored) / static_cast<double>(paths);
    est.mean_censored = neumaier_sum(clipped) / static_cast<double>(paths);
    double var = 0.0;
    for (double v : clipped) var += (v - est.mean_censored) * (v - est.mean_censored);
    var /= std::max(1.0, static_cast<double>(paths - 1));
    est.std_error = std::sqrt(var / static_cast<double>(paths));
    return est;
}

LogStarEstimate heavy_demo_logstar_bound(int depth, int paths, std::uint64_t seed, int threads) {
    if (depth < 0) throw DomainError("heavy_demo_logstar_bound: depth must be >= 0");
    if (paths < 1) throw DomainError("heavy_demo_logstar_bound: paths must be >= 1");
    LogStarEstimate est;
    est.paths = paths;
    if (depth == 0) return est;  // empty tower: log*(1) = 0 exactly

    const DistributionSpec dist{HeavyDemo{}};
    auto vals = run_paths<double>(paths, threads, [&](int idx) {
        SubstreamRng rng = SubstreamRng::for_path(seed, static_cast<std::uint64_t>(idx));
        std::vector<Draw> draws;
        draws.reserve(static_cast<std::size_t>(depth));
        for (int i = 0; i < depth; ++i) draws.push_back(sample_a(dist, rng));
        LevelIndex t = draws.back().value;
        for (int k = depth - 2; k >= 0; --k) {
            t = li_pow(draws[static_cast<std::size_t>(k)].value, t);
        }
        return static_cast<double>(log_star(t));
    });
    est.mean = neumaier_sum(vals) / static_cast<double>(paths);
    double var = 0.0;
    for (double v : vals) var += (v - est.mean) * (v - est.mean);
    var /= std::max(1.0, static_cast<double>(paths - 1));
    est.std_error = std::sqrt(var / static_cast<double>(paths));
    return est;
}

}  // namespace towerlab::sim
