// Copyright 2026 the towerlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOWERLAB_DISTRIBUTIONS_HPP_
#define TOWERLAB_DISTRIBUTIONS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "towerlab/invtower.hpp"
#include "towerlab/level_index.hpp"

namespace towerlab {

struct SupportBounds {
    double a = 0.0;  // inf of support
    double b = 0.0;  // sup of support, may be +inf
};

// --- distribution families -------------------------------------------------

struct Uniform {
    double lo, hi;
};

struct PointMasses {
    struct Atom {
        double value;
        double prob;
    };
    std::vector<Atom> atoms;
};

// Law of U*V with U, V independent Unif(0,1).
struct ProductUniform {};

// Law of max(V1^(r/(1-r)), V2*V3).
struct MaxExample2 {
    double r;
};

struct InverseTowerSampler {
    invtower::InvTowerParams params;
};

/// Family pinned down by its tail values q(n) = P(A <= e^(1/tetrate(e, n))).
/// Draws are the boundary values e^(1/tetrate(e, L)) with P(L >= n) = q(n);
/// the level L is kept alongside so threshold comparisons stay exact.
struct LogStarTail {
    enum class Form { kPower, kGeometric, kConstant };
    Form form = Form::kPower;
    double c = 1.0;  // scale
    double p = 0.5;  // exponent for kPower (q = c*n^-p), ratio for kGeometric (q = c*p^n)

    double q(long n) const;
};

/// Heavy-tailed demo: tetrate(e, n) w.p. 2^-(n+1) and e^(1/tetrate(e, 16n))
/// w.p. 2^-(n+1), n >= 1.
struct HeavyDemo {};

// ----------------------------------------------------------------------------

struct DistributionSpec {
    std::variant<Uniform, PointMasses, ProductUniform, MaxExample2, InverseTowerSampler,
                 LogStarTail, HeavyDemo>
        family;

    SupportBounds support() const;
    std::string family_name() const;
    bool is_point_mass() const;  // single atom

    /// Analytic CDF where the family has one (Uniform, PointMasses,
    /// MaxExample2, InverseTowerSampler).
    std::optional<std::function<double(double)>> analytic_cdf() const;

    /// Parses {"family": "...", "params": {...}} and validates it.
    static DistributionSpec from_json_text(const std::string& text);
    std::string to_json_text() const;
};

/// Validation shared by all construction paths: probabilities sum to 1,
/// atoms at 0 rejected, parameter ranges enforced.
void validate(const DistributionSpec& spec);

}  // namespace towerlab

#endif  // TOWERLAB_DISTRIBUTIONS_HPP_
