// Copyright 2026 the towerlab authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line laboratory for random infinite power towers: convergence
// classification, boundary-function tables, Monte Carlo simulation, and
// inverse tower distributions. Emits CSV for tabular data and JSON for
// verdicts and summaries; every output embeds (seed, version, config) so
// reruns with the same flags are byte-identical.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "towerlab/alt.hpp"
#include "towerlab/classify.hpp"
#include "towerlab/constants.hpp"
#include "towerlab/distributions.hpp"
#include "towerlab/errors.hpp"
#include "towerlab/invtower.hpp"
#include "towerlab/level_index.hpp"
#include "towerlab/rng.hpp"
#include "towerlab/sim.hpp"
#include "towerlab/special.hpp"
#include "towerlab/stats.hpp"

namespace {

using nlohmann::json;
using namespace towerlab;

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInfeasible = 3;

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path);
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json metadata(std::uint64_t seed, const json& config) {
    return json{{"seed", seed}, {"version", kVersion}, {"config", config}};
}

std::string csv_num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

classify::TailCondition tail_from_json(const json& spec) {
    LogStarTail t;
    const std::string form = spec.value("form", "power");
    if (form == "power") {
        t.form = LogStarTail::Form::kPower;
    } else if (form == "geometric") {
        t.form = LogStarTail::Form::kGeometric;
    } else if (form == "constant") {
        t.form = LogStarTail::Form::kConstant;
    } else {
        throw DomainError("tail file: unknown form '" + form + "'");
    }
    t.c = spec.value("c", 1.0);
    t.p = spec.value("p", 0.5);
    return classify::TailSequence{[t](long n) { return t.q(n); }};
}

// --- classify ---------------------------------------------------------------

int cmd_classify(double a, double b, const std::string& tail_file, const std::string& dist_file,
                 std::uint64_t seed, const std::string& out) {
    json config{{"command", "classify"}};
    classify::TailCondition tail = classify::UnknownTail{};
    json evidence = json::object();

    if (!dist_file.empty()) {
        const DistributionSpec dist = DistributionSpec::from_json_text(read_file(dist_file));
        const SupportBounds sb = dist.support();
        a = sb.a;
        b = sb.b;
        config["dist"] = json::parse(dist.to_json_text());
        try {
            tail = classify::tail_sequence_for(dist);
        } catch (const UnsupportedDistribution&) {
        }
    }
    if (!tail_file.empty()) {
        tail = tail_from_json(json::parse(read_file(tail_file)));
        config["tail_file"] = tail_file;
    }
    config["a"] = a;
    config["b"] = std::isinf(b) ? json("inf") : json(b);

    if (b <= 1.0 && b > 0.0) evidence["g_of_b"] = g_boundary(b);
    if (const auto* seq = std::get_if<classify::TailSequence>(&tail)) {
        const auto sr = classify::stopping_time_series(*seq);
        evidence["series_expectation"] = sr.expectation_estimate;
        evidence["series_terms_used"] = sr.partial_sums.size();
    }

    const classify::Verdict v = classify::classify_bounds({a, b}, tail);
    json result{{"metadata", metadata(seed, config)},
                {"verdict",
                 {{"outcome", classify::outcome_name(v.outcome)},
                  {"rule", v.rule},
                  {"detail", v.detail}}},
                {"evidence", evidence}};
    write_text(out, result.dump(2) + "\n");
    return kExitOk;
}

// --- g-table -----------------------------------------------------------------

int cmd_g_table(double min_x, double max_x, int steps, bool verify, std::uint64_t seed,
                const std::string& out) {
    if (!(min_x > 0.0) || !(max_x > min_x) || max_x > 1.0 || steps < 2) {
        std::cerr << "g-table: need 0 < min < max <= 1 and steps >= 2\n";
        return kExitBadInput;
    }
    std::ostringstream csv;
    csv << "# seed=" << seed << " version=" << kVersion << " command=g-table min=" << min_x
        << " max=" << max_x << " steps=" << steps << "\n";
    csv << (verify ? "x,g,g_oracle\n" : "x,g\n");
    double max_dev = 0.0;
    for (int i = 0; i < steps; ++i) {
        const double x = min_x + (max_x - min_x) * static_cast<double>(i) / (steps - 1);
        const double gval = g_boundary(x);
        csv << csv_num(x) << "," << csv_num(gval);
        if (verify) {
            const double oracle = alt::g_boundary_oracle(x);
            max_dev = std::max(max_dev, std::fabs(oracle - gval));
            csv << "," << csv_num(oracle);
        }
        csv << "\n";
    }
    if (verify) csv << "# max_abs_deviation=" << csv_num(max_dev) << "\n";
    write_text(out, csv.str());
    return kExitOk;
}

// --- simulate ----------------------------------------------------------------

int cmd_simulate(const std::string& dist_file, int depth, int paths, const std::string& mode,
                 const std::string& report, std::uint64_t seed, int threads,
                 const std::string& out_csv, const std::string& out_summary) {
    const DistributionSpec dist = DistributionSpec::from_json_text(read_file(dist_file));
    json config{{"command", "simulate"}, {"dist", json::parse(dist.to_json_text())},
                {"depth", depth},        {"paths", paths},
                {"mode", mode},          {"report", report},
                {"threads", threads}};
    json summary{{"metadata", metadata(seed, config)}};
    std::ostringstream csv;
    csv << "# seed=" << seed << " version=" << kVersion << " dist=" << dist.family_name()
        << " depth=" << depth << " paths=" << paths << "\n";

    if (report == "osc") {
        const auto rep = sim::oscillation_gap(dist, depth, paths, seed, threads);
        summary["oscillation"] = {{"even_limit_est", rep.even_limit_est},
                                  {"odd_limit_est", rep.odd_limit_est},
                                  {"gap", rep.gap},
                                  {"even_depth", rep.even_depth},
                                  {"paths", rep.paths},
                                  {"per_path_gaps",
                                   {{"mean", rep.per_path_gaps.mean},
                                    {"median", rep.per_path_gaps.median},
                                    {"q10", rep.per_path_gaps.q10},
                                    {"q90", rep.per_path_gaps.q90},
                                    {"min", rep.per_path_gaps.min},
                                    {"max", rep.per_path_gaps.max}}}};
        csv << "path,even,odd,gap\n";
        for (int i = 0; i < paths; ++i) {
            SubstreamRng rng = SubstreamRng::for_path(seed, static_cast<std::uint64_t>(i));
            std::vector<double> a(static_cast<std::size_t>(rep.even_depth) + 1);
            for (auto& v : a) v = sim::sample_a(dist, rng).value.to_double();
            const auto tower = [&a](int d) {
                double t = a[static_cast<std::size_t>(d - 1)];
                for (int k = d - 2; k >= 0; --k) t = std::pow(a[static_cast<std::size_t>(k)], t);
                return t;
            };
            const double even = tower(rep.even_depth), odd = tower(rep.even_depth + 1);
            csv << i << "," << csv_num(even) << "," << csv_num(odd) << ","
                << csv_num(even - odd) << "\n";
        }
    } else if (report == "stopping") {
        const auto est = sim::estimate_stopping_time(dist, depth, paths, seed, threads);
        summary["stopping"] = {{"mean_censored", est.mean_censored},
                               {"censored_fraction", est.censored_fraction},
                               {"std_error", est.std_error},
                               {"n_cap", depth},
                               {"paths", est.paths}};
        csv << "path,n_or_cap,censored\n";
        for (int i = 0; i < paths; ++i) {
            SubstreamRng rng = SubstreamRng::for_path(seed, static_cast<std::uint64_t>(i));
            long n = 0;
            bool censored = true;
            for (long k = 1; k <= depth; ++k) {
                const auto draw = sim::sample_a(dist, rng);
                if (sim::below_threshold(dist, draw, k)) {
                    n = k;
                    censored = false;
                    break;
                }
            }
            csv << i << "," << (censored ? depth : n) << "," << (censored ? 1 : 0) << "\n";
        }
    } else if (mode == "backward" || report == "dist") {
        std::vector<double> finite;
        int diverged = 0;
        csv << "path,value,diverged\n";
        for (int i = 0; i < paths; ++i) {
            SubstreamRng rng = SubstreamRng::for_path(seed, static_cast<std::uint64_t>(i));
            const auto s = sim::tower_backward(dist, depth, rng);
            if (s.diverged || !s.value.fits_double()) {
                ++diverged;
                csv << i << ",inf,1\n";
            } else {
                finite.push_back(s.value.to_double());
                csv << i << "," << csv_num(s.value.to_double()) << ",0\n";
            }
        }
        json dist_summary{{"paths", paths},
                          {"depth", depth},
                          {"diverged_fraction", static_cast<double>(diverged) / paths}};
        if (!finite.empty()) {
            double mn = finite[0], mx = finite[0], mean = 0.0;
            for (double v : finite) {
                mn = std::min(mn, v);
                mx = std::max(mx, v);
                mean += v;
            }
            dist_summary["mean"] = mean / static_cast<double>(finite.size());
            dist_summary["min"] = mn;
            dist_summary["max"] = mx;
        }
        if (dist.family_name() == "product_uniform" && finite.size() >= 8) {
            const auto ks = stats::ks_one_sample(
                finite, [](double x) { return std::clamp(x, 0.0, 1.0); });
            dist_summary["ks_uniform"] = {{"statistic", ks.statistic}, {"p_value", ks.p_value}};
        }
        summary["distribution"] = dist_summary;
    } else {
        // Forward trajectories, one CSV row per (path, height).
        csv << "path,height,value,level,mantissa,diverged\n";
        int diverged_paths = 0;
        std::vector<double> finals;
        for (int i = 0; i < paths; ++i) {
            SubstreamRng rng = SubstreamRng::for_path(seed, static_cast<std::uint64_t>(i));
            const auto traj = sim::tower_forward(dist, depth, rng);
            for (const auto& s : traj) {
                csv << i << "," << s.depth_used << ","
                    << (s.value.fits_double() ? csv_num(s.value.to_double()) : "inf") << ","
                    << s.value.level() << "," << csv_num(s.value.mantissa()) << ","
                    << (s.diverged ? 1 : 0) << "\n";
            }
            if (traj.back().diverged) {
                ++diverged_paths;
            } else if (traj.back().value.fits_double()) {
                finals.push_back(traj.back().value.to_double());
            }
        }
        json fw{{"paths", paths},
                {"depth", depth},
                {"diverged_fraction", static_cast<double>(diverged_paths) / paths}};
        if (!finals.empty()) {
            double mean = 0.0;
            for (double v : finals) mean += v;
            fw["final_mean"] = mean / static_cast<double>(finals.size());
        }
        summary["forward"] = fw;
    }

    if (!out_csv.empty()) write_text(out_csv, csv.str());
    write_text(out_summary, summary.dump(2) + "\n");
    return kExitOk;
}

// --- inv-tower ----------------------------------------------------------------

int cmd_inv_tower(double alpha, double beta, double r, bool has_eval, double eval_x, bool table,
                  long sample_n, bool audit, double min_x, double max_x, int steps,
                  std::uint64_t seed, const std::string& out) {
    invtower::InvTowerParams params{alpha, beta, r};
    const auto feas = invtower::feasibility(params);
    json config{{"command", "inv-tower"}, {"alpha", alpha}, {"beta", beta}, {"r", r}};
    json result{{"metadata", metadata(seed, config)},
                {"feasibility", {{"feasible", feas.feasible}, {"reason", feas.reason}}}};
    invtower::InvTowerCDF cdf{params};

    const bool artifact_needs_feasible = has_eval || table || sample_n > 0;
    if (artifact_needs_feasible && !feas.feasible) {
        write_text(out, result.dump(2) + "\n");
        return kExitInfeasible;
    }

    if (has_eval) {
        result["eval"] = {{"x", eval_x}, {"F", invtower::cdf_eval(cdf, eval_x)}};
    }
    if (audit) {
        const auto violations = invtower::monotonicity_audit(cdf, steps > 2 ? steps : 10000);
        json vj = json::array();
        for (const auto& v : violations) {
            vj.push_back({{"x_lo", v.x_lo}, {"x_hi", v.x_hi}, {"f_lo", v.f_lo}, {"f_hi", v.f_hi}});
        }
        result["audit"] = {{"violations", vj}, {"clean", violations.empty()}};
    }
    if (table) {
        const double lo = min_x > 0.0 ? min_x : cdf.support_lo();
        const double hi = max_x > 0.0 ? max_x : cdf.support_hi();
        std::ostringstream csv;
        csv << "# seed=" << seed << " version=" << kVersion << " alpha=" << alpha
            << " beta=" << beta << " r=" << r << "\n";
        csv << "x,F\n";
        const int n = steps > 2 ? steps : 200;
        for (int i = 0; i < n; ++i) {
            const double x = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
            csv << csv_num(x) << "," << csv_num(invtower::cdf_eval(cdf, x)) << "\n";
        }
        result["table_written"] = true;
        write_text(out, csv.str());
        std::cout << result.dump(2) << "\n";
        return kExitOk;
    }
    if (sample_n > 0) {
        SubstreamRng rng = SubstreamRng::for_path(seed, 0);
        std::ostringstream csv;
        csv << "# seed=" << seed << " version=" << kVersion << "\n";
        csv << "draw\n";
        for (long i = 0; i < sample_n; ++i) {
            double u = rng.uniform01();
            while (u <= 0.0) u = rng.uniform01();
            csv << csv_num(invtower::inv_sample(cdf, u)) << "\n";
        }
        result["samples_written"] = sample_n;
        write_text(out, csv.str());
        std::cout << result.dump(2) << "\n";
        return kExitOk;
    }
    write_text(out, result.dump(2) + "\n");
    return kExitOk;
}

// --- verify -------------------------------------------------------------------

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

void add_check(std::vector<Check>& checks, const std::string& name, bool pass,
               const std::string& detail) {
    checks.push_back({name, pass, detail});
    std::cerr << (pass ? "[PASS] " : "[FAIL] ") << name << ": " << detail << "\n";
}

std::string num(double v) {
    std::ostringstream os;
    os.precision(8);
    os << v;
    return os.str();
}

void suite_example1(std::uint64_t seed, std::vector<Check>& checks) {
    // (UV)^W is uniform.
    SubstreamRng rng = SubstreamRng::for_path(seed, 1);
    std::vector<double> xs;
    xs.reserve(100000);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform01(), v = rng.uniform01(), w = rng.uniform01();
        xs.push_back(std::pow(u * v, w));
    }
    auto ks = stats::ks_one_sample(xs, [](double x) { return std::clamp(x, 0.0, 1.0); });
    add_check(checks, "example1/uvw-uniform", ks.p_value > 0.01, "KS p = " + num(ks.p_value));

    // Backward product-uniform towers at depth 40 are uniform.
    DistributionSpec pu{ProductUniform{}};
    std::vector<double> ts;
    ts.reserve(100000);
    for (int i = 0; i < 100000; ++i) {
        SubstreamRng r = SubstreamRng::for_path(seed, 100 + static_cast<std::uint64_t>(i));
        ts.push_back(sim::tower_backward(pu, 40, r).value.to_double());
    }
    ks = stats::ks_one_sample(ts, [](double x) { return std::clamp(x, 0.0, 1.0); });
    add_check(checks, "example1/tower-uniform", ks.p_value > 0.01, "KS p = " + num(ks.p_value));
}

void suite_example2(std::uint64_t seed, std::vector<Check>& checks) {
    // Towers built from the max(V1^(r/(1-r)), V2 V3) law have the law of U^r.
    DistributionSpec m2{MaxExample2{0.5}};
    std::vector<double> ts;
    ts.reserve(100000);
    for (int i = 0; i < 100000; ++i) {
        SubstreamRng r = SubstreamRng::for_path(seed, static_cast<std::uint64_t>(i));
        ts.push_back(sim::tower_backward(m2, 40, r).value.to_double());
    }
    const auto ks = stats::ks_one_sample(ts, [](double x) {
        return x <= 0.0 ? 0.0 : (x >= 1.0 ? 1.0 : x * x);
    });
    add_check(checks, "example2/tower-sqrt-uniform", ks.p_value > 0.01,
              "KS p = " + num(ks.p_value));

    // Closed form for alpha = 0, beta = 1, r = 1/2.
    invtower::InvTowerCDF f{{0.0, 1.0, 0.5}};
    double max_err = 0.0;
    for (int i = 1; i < 1000; ++i) {
        const double x = static_cast<double>(i) / 1000.0;
        max_err = std::max(max_err,
                           std::fabs(invtower::cdf_eval(f, x) - x * x * (1.0 - std::log(x))));
    }
    add_check(checks, "example2/closed-form", max_err <= 1e-12, "max err = " + num(max_err));

    // Fixed-point law A^T ~ T for (0.5, 2, 0.3).
    invtower::InvTowerCDF fc{{0.5, 2.0, 0.3}};
    SubstreamRng rng = SubstreamRng::for_path(seed, 777);
    std::vector<double> at;
    at.reserve(100000);
    for (int i = 0; i < 100000; ++i) {
        double u = rng.uniform01();
        while (u <= 0.0) u = rng.uniform01();
        const double a = invtower::inv_sample(fc, u);
        const double t = std::pow(0.5 + 1.5 * rng.uniform01(), 0.3);
        at.push_back(std::pow(a, t));
    }
    const auto ks2 = stats::ks_one_sample(at, [](double x) {
        const double u = std::pow(x, 1.0 / 0.3);
        return std::clamp((u - 0.5) / 1.5, 0.0, 1.0);
    });
    add_check(checks, "example2/fixed-point-law", ks2.p_value > 0.01,
              "KS p = " + num(ks2.p_value));
}

void suite_boundary(std::uint64_t seed, std::vector<Check>& checks) {
    // Closed form versus the bisection oracle.
    double max_dev = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double x = 0.005 + (kEToMinusE - 0.006) * static_cast<double>(i) / 49.0;
        max_dev = std::max(max_dev, std::fabs(alt::g_boundary_oracle(x) - g_boundary(x)));
    }
    add_check(checks, "boundary/oracle-agreement", max_dev <= 1e-6,
              "max |G - oracle| = " + num(max_dev));

    // Tangency system residuals at the boundary.
    bool resid_ok = true;
    for (double x : {0.01, 0.04}) {
        const double t = std::exp(1.0 / lambert_w0(1.0 / std::log(x)).value);
        const auto [r1, r2] = alt::tangency_residuals(x, g_boundary(x), t);
        resid_ok = resid_ok && std::fabs(r1) <= 1e-10 && std::fabs(r2) <= 1e-8;
    }
    add_check(checks, "boundary/tangency-residuals", resid_ok, "x in {0.01, 0.04}");

    // Deterministic oscillation at 0.04 matches the alternating limits.
    const auto lims = alt::at_limits(0.04, 0.04, 1e-13);
    const auto rep =
        sim::oscillation_gap(DistributionSpec{PointMasses{{{0.04, 1.0}}}}, 400, 8, seed);
    const bool osc_ok = std::fabs(rep.even_limit_est - lims.at_e) <= 1e-6 &&
                        std::fabs(rep.odd_limit_est - lims.at_o) <= 1e-6;
    add_check(checks, "boundary/oscillation-limits", osc_ok,
              "even = " + num(rep.even_limit_est) + ", odd = " + num(rep.odd_limit_est));
}

void suite_heavy(std::uint64_t seed, std::vector<Check>& checks) {
    const double bound = 8.0 * (1.0 + std::sqrt(1.0 - std::log(2.0))) / std::log(2.0);
    bool under = true;
    std::string detail;
    for (int depth : {1, 5, 10}) {
        const auto est = sim::heavy_demo_logstar_bound(depth, 10000, seed);
        under = under && est.mean < bound;
        detail += "d" + std::to_string(depth) + "=" + num(est.mean) + " ";
    }
    add_check(checks, "heavy/logstar-bound", under, detail + "< " + num(bound));

    const auto d1 = sim::heavy_demo_logstar_bound(1, 10000, seed);
    add_check(checks, "heavy/depth1-mean", std::fabs(d1.mean - 1.0) <= 3.0 * d1.std_error,
              "mean = " + num(d1.mean) + " +- " + num(d1.std_error));
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& out) {
    std::vector<Check> checks;
    if (suite == "example1" || suite == "all") suite_example1(seed, checks);
    if (suite == "example2" || suite == "all") suite_example2(seed, checks);
    if (suite == "boundary" || suite == "all") suite_boundary(seed, checks);
    if (suite == "heavy" || suite == "all") suite_heavy(seed, checks);
    if (checks.empty()) {
        std::cerr << "verify: unknown suite '" << suite << "'\n";
        return kExitBadInput;
    }
    bool all_pass = true;
    json cj = json::array();
    for (const auto& c : checks) {
        all_pass = all_pass && c.pass;
        cj.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    json config{{"command", "verify"}, {"suite", suite}};
    json report{{"metadata", metadata(seed, config)}, {"checks", cj}, {"pass", all_pass}};
    write_text(out, report.dump(2) + "\n");
    return all_pass ? kExitOk : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"towerlab: random infinite power tower laboratory"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    std::uint64_t seed = 12345;
    app.add_option("--seed", seed, "root seed echoed into all outputs")->capture_default_str();

    // classify
    auto* c = app.add_subcommand("classify", "convergence verdict from support bounds");
    double ca = 0.0, cb = 0.0;
    std::string c_tail, c_dist, c_out;
    c->add_option("--a", ca, "inf of the support");
    c->add_option("--b", cb, "sup of the support");
    c->add_option("--tail-file", c_tail, "JSON tail model for the a = 1 case");
    c->add_option("--dist", c_dist, "distribution spec JSON file (overrides --a/--b)");
    c->add_option("--out", c_out, "output path (default stdout)");

    // g-table
    auto* g = app.add_subcommand("g-table", "table of the convergence boundary function");
    double g_min = 0.005, g_max = kEToMinusE;
    int g_steps = 50;
    bool g_verify = false;
    std::string g_out;
    g->add_option("--min", g_min, "lower end of the x range")->capture_default_str();
    g->add_option("--max", g_max, "upper end of the x range")->capture_default_str();
    g->add_option("--steps", g_steps, "row count")->capture_default_str();
    g->add_flag("--verify", g_verify, "add the independent oracle column");
    g->add_option("--out", g_out, "output path (default stdout)");

    // simulate
    auto* s = app.add_subcommand("simulate", "Monte Carlo tower simulation");
    std::string s_dist, s_mode = "forward", s_report, s_csv, s_summary;
    int s_depth = 100, s_paths = 1000, s_threads = 1;
    s->add_option("--dist", s_dist, "distribution spec JSON file")->required();
    s->add_option("--depth", s_depth, "tower depth (or n_cap for --report stopping)")
        ->capture_default_str();
    s->add_option("--paths", s_paths, "Monte Carlo paths")->capture_default_str();
    s->add_option("--mode", s_mode, "forward | backward")->capture_default_str();
    s->add_option("--report", s_report, "osc | dist | stopping");
    s->add_option("--threads", s_threads, "worker threads (never changes results)")
        ->capture_default_str();
    s->add_option("--out", s_csv, "CSV data path");
    s->add_option("--summary", s_summary, "JSON summary path (default stdout)");

    // inv-tower
    auto* t = app.add_subcommand("inv-tower", "inverse tower distribution toolkit");
    double t_alpha = 0.0, t_beta = 1.0, t_r = 0.5, t_eval = 0.0, t_min = 0.0, t_max = 0.0;
    long t_sample = 0;
    int t_steps = 0;
    bool t_table = false, t_audit = false;
    std::string t_out;
    t->add_option("--alpha", t_alpha, "uniform lower endpoint")->required();
    t->add_option("--beta", t_beta, "uniform upper endpoint")->required();
    t->add_option("--r", t_r, "power")->required();
    auto* t_eval_opt = t->add_option("--eval", t_eval, "evaluate F at x");
    t->add_flag("--table", t_table, "emit an (x, F) CSV table");
    t->add_option("--sample", t_sample, "draw n samples by inverse transform");
    t->add_flag("--audit", t_audit, "scan F for monotonicity violations");
    t->add_option("--min", t_min, "table lower end (default support floor)");
    t->add_option("--max", t_max, "table upper end (default support top)");
    t->add_option("--steps", t_steps, "table/audit grid size");
    t->add_option("--out", t_out, "output path (default stdout)");

    // verify
    auto* v = app.add_subcommand("verify", "run a named verification suite");
    std::string v_suite = "all", v_out;
    v->add_option("--suite", v_suite, "example1 | example2 | boundary | heavy | all")
        ->capture_default_str();
    v->add_option("--out", v_out, "JSON report path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (app.got_subcommand(c)) {
            if (c_dist.empty() && !(cb > 0.0)) {
                std::cerr << "classify: provide --a/--b or --dist\n";
                return kExitBadInput;
            }
            return cmd_classify(ca, cb, c_tail, c_dist, seed, c_out);
        }
        if (app.got_subcommand(g)) {
            return cmd_g_table(g_min, g_max, g_steps, g_verify, seed, g_out);
        }
        if (app.got_subcommand(s)) {
            return cmd_simulate(s_dist, s_depth, s_paths, s_mode, s_report, seed, s_threads,
                                s_csv, s_summary);
        }
        if (app.got_subcommand(t)) {
            return cmd_inv_tower(t_alpha, t_beta, t_r, t_eval_opt->count() > 0, t_eval, t_table,
                                 t_sample, t_audit, t_min, t_max, t_steps, seed, t_out);
        }
        if (app.got_subcommand(v)) {
            return cmd_verify(v_suite, seed, v_out);
        }
    } catch (const InfeasibleParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitOk;
}
