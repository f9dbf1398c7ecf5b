// Copyright 2026 the towerlab authors
// SPDX-License-Identifier: Apache-2.0

#include "towerlab/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "towerlab/constants.hpp"
#include "towerlab/errors.hpp"

namespace towerlab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double LogStarTail::q(long n) const {
    if (n < 1) throw DomainError("LogStarTail::q: n must be >= 1");
    double v = 0.0;
    switch (form) {
        case Form::kPower:
            v = c * std::pow(static_cast<double>(n), -p);
            break;
        case Form::kGeometric:
            v = c * std::pow(p, static_cast<double>(n));
            break;
        case Form::kConstant:
            v = c;
            break;
    }
    return std::clamp(v, 0.0, 1.0);
}

SupportBounds DistributionSpec::support() const {
    return std::visit(
        [](const auto& fam) -> SupportBounds {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, Uniform>) {
                return {fam.lo, fam.hi};
            } else if constexpr (std::is_same_v<T, PointMasses>) {
                double lo = kInf, hi = -kInf;
                for (const auto& a : fam.atoms) {
                    lo = std::min(lo, a.value);
                    hi = std::max(hi, a.value);
                }
                return {lo, hi};
            } else if constexpr (std::is_same_v<T, ProductUniform>) {
                return {0.0, 1.0};
            } else if constexpr (std::is_same_v<T, MaxExample2>) {
                return {0.0, 1.0};
            } else if constexpr (std::is_same_v<T, InverseTowerSampler>) {
                invtower::InvTowerCDF f{fam.params};
                return {f.support_lo(), f.support_hi()};
            } else if constexpr (std::is_same_v<T, LogStarTail>) {
                // Values are e^(1/tetrate(e, L)); L = 0 (value e) occurs iff q(1) < 1.
                const double hi = fam.q(1) < 1.0 ? kE : std::exp(1.0 / kE);
                return {1.0, hi};
            } else {
                return {1.0, kInf};  // HeavyDemo
            }
        },
        family);
}

std::string DistributionSpec::family_name() const {
    return std::visit(
        [](const auto& fam) -> std::string {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, Uniform>) return "uniform";
            if constexpr (std::is_same_v<T, PointMasses>) return "point_masses";
            if constexpr (std::is_same_v<T, ProductUniform>) return "product_uniform";
            if constexpr (std::is_same_v<T, MaxExample2>) return "max_example2";
            if constexpr (std::is_same_v<T, InverseTowerSampler>) return "inverse_tower";
            if constexpr (std::is_same_v<T, LogStarTail>) return "log_star_tail";
            if constexpr (std::is_same_v<T, HeavyDemo>) return "heavy_demo";
        },
        family);
}

bool DistributionSpec::is_point_mass() const {
    const auto* pm = std::get_if<PointMasses>(&family);
    return pm != nullptr && pm->atoms.size() == 1;
}

std::optional<std::function<double(double)>> DistributionSpec::analytic_cdf() const {
    if (const auto* u = std::get_if<Uniform>(&family)) {
        const double lo = u->lo, hi = u->hi;
        return [lo, hi](double x) { return std::clamp((x - lo) / (hi - lo), 0.0, 1.0); };
    }
    if (const auto* pm = std::get_if<PointMasses>(&family)) {
        auto atoms = pm->atoms;
        std::sort(atoms.begin(), atoms.end(),
                  [](const auto& a, const auto& b) { return a.value < b.value; });
        return [atoms](double x) {
            double acc = 0.0;
            for (const auto& a : atoms) {
                if (a.value <= x) acc += a.prob;
            }
            return acc;
        };
    }
    if (std::get_if<ProductUniform>(&family) != nullptr) {
        return [](double x) {
            if (x <= 0.0) return 0.0;
            if (x >= 1.0) return 1.0;
            return x * (1.0 - std::log(x));
        };
    }
    if (const auto* m = std::get_if<MaxExample2>(&family)) {
        // P(max(V1^(r/(1-r)), V2 V3) <= x) = x^((1-r)/r) * x * (1 - ln x)
        const double r = m->r;
        return [r](double x) {
            if (x <= 0.0) return 0.0;
            if (x >= 1.0) return 1.0;
            return std::pow(x, (1.0 - r) / r) * x * (1.0 - std::log(x));
        };
    }
    if (const auto* it = std::get_if<InverseTowerSampler>(&family)) {
        invtower::InvTowerCDF f{it->params};
        return [f](double x) { return invtower::cdf_eval(f, x); };
    }
    return std::nullopt;
}

void validate(const DistributionSpec& spec) {
    std::visit(
        [](const auto& fam) {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, Uniform>) {
                if (!(fam.lo >= 0.0) || !(fam.hi > fam.lo)) {
                    throw DomainError("uniform: requires 0 <= lo < hi");
                }
            } else if constexpr (std::is_same_v<T, PointMasses>) {
                if (fam.atoms.empty()) throw DomainError("point_masses: no atoms");
                double total = 0.0;
                for (const auto& a : fam.atoms) {
                    if (!(a.value > 0.0)) {
                        throw DomainError("point_masses: atoms must be at positive values");
                    }
                    if (!(a.prob > 0.0)) throw DomainError("point_masses: probs must be positive");
                    total += a.prob;
                }
                if (std::fabs(total - 1.0) > 1e-12) {
                    throw DomainError("point_masses: probabilities must sum to 1");
                }
            } else if constexpr (std::is_same_v<T, MaxExample2>) {
                if (!(fam.r > 0.0 && fam.r < 1.0)) throw DomainError("max_example2: r in (0,1)");
            } else if constexpr (std::is_same_v<T, InverseTowerSampler>) {
                const auto f = invtower::feasibility(fam.params);
                if (!f.feasible) {
                    throw DomainError("inverse_tower: infeasible parameters: " + f.reason);
                }
            } else if constexpr (std::is_same_v<T, LogStarTail>) {
                if (!(fam.c >= 0.0 && fam.c <= 1.0)) {
                    throw DomainError("log_star_tail: scale c must be in [0, 1]");
                }
                if (fam.form == LogStarTail::Form::kGeometric && !(fam.p > 0.0 && fam.p < 1.0)) {
                    throw DomainError("log_star_tail: geometric ratio must be in (0, 1)");
                }
                if (fam.form == LogStarTail::Form::kPower && !(fam.p > 0.0)) {
                    throw DomainError("log_star_tail: power exponent must be positive");
                }
            }
        },
        spec.family);
}

DistributionSpec DistributionSpec::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("spec JSON parse error: ") + e.what());
    }
    if (!j.contains("family") || !j["family"].is_string()) {
        throw DomainError("spec JSON: missing string field 'family'");
    }
    const std::string fam = j["family"].get<std::string>();
    const nlohmann::json params = j.value("params", nlohmann::json::object());

    DistributionSpec spec;
    if (fam == "uniform") {
        spec.family = Uniform{params.at("lo").get<double>(), params.at("hi").get<double>()};
    } else if (fam == "point_masses") {
        PointMasses pm;
        for (const auto& a : params.at("atoms")) {
            pm.atoms.push_back({a.at("value").get<double>(), a.at("prob").get<double>()});
        }
        spec.family = pm;
    } else if (fam == "product_uniform") {
        spec.family = ProductUniform{};
    } else if (fam == "max_example2") {
        spec.family = MaxExample2{params.at("r").get<double>()};
    } else if (fam == "inverse_tower") {
        invtower::InvTowerParams p;
        p.alpha = params.at("alpha").get<double>();
        p.beta = params.at("beta").get<double>();
        p.r = params.at("r").get<double>();
        spec.family = InverseTowerSampler{p};
    } else if (fam == "log_star_tail") {
        LogStarTail t;
        const std::string form = params.value("form", "power");
        if (form == "power") {
            t.form = LogStarTail::Form::kPower;
        } else if (form == "geometric") {
            t.form = LogStarTail::Form::kGeometric;
        } else if (form == "constant") {
            t.form = LogStarTail::Form::kConstant;
        } else {
            throw DomainError("log_star_tail: unknown form '" + form + "'");
        }
        t.c = params.value("c", 1.0);
        t.p = params.value("p", 0.5);
        spec.family = t;
    } else if (fam == "heavy_demo") {
        spec.family = HeavyDemo{};
    } else {
        throw DomainError("unknown distribution family '" + fam + "'");
    }
    validate(spec);
    return spec;
}

std::string DistributionSpec::to_json_text() const {
    nlohmann::json j;
    j["family"] = family_name();
    nlohmann::json params = nlohmann::json::object();
    std::visit(
        [&params](const auto& fam) {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, Uniform>) {
                params["lo"] = fam.lo;
                params["hi"] = fam.hi;
            } else if constexpr (std::is_same_v<T, PointMasses>) {
                nlohmann::json atoms = nlohmann::json::array();
                for (const auto& a : fam.atoms) {
                    atoms.push_back({{"value", a.value}, {"prob", a.prob}});
                }
                params["atoms"] = atoms;
            } else if constexpr (std::is_same_v<T, MaxExample2>) {
                params["r"] = fam.r;
            } else if constexpr (std::is_same_v<T, InverseTowerSampler>) {
                params["alpha"] = fam.params.alpha;
                params["beta"] = fam.params.beta;
                params["r"] = fam.params.r;
            } else if constexpr (std::is_same_v<T, LogStarTail>) {
                params["form"] = fam.form == LogStarTail::Form::kPower ? "power"
                                 : fam.form == LogStarTail::Form::kGeometric ? "geometric"
                                                                             : "constant";
                params["c"] = fam.c;
                params["p"] = fam.p;
            }
        },
        family);
    j["params"] = params;
    return j.dump();
}

}  // namespace towerlab
