// Copyright 2026 the towerlab authors
// SPDX-License-Identifier: Apache-2.0

#include "towerlab/level_index.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "towerlab/constants.hpp"
#include "towerlab/errors.hpp"

namespace towerlab {

namespace {
constexpr int kOverflowLevel = LevelIndex::kMaxLevel + 1;
}

LevelIndex::LevelIndex(double v) : level_(0), mantissa_(v) {
    if (!(v >= 0.0) || std::isinf(v)) {
        throw DomainError("LevelIndex requires a finite nonnegative value");
    }
}

LevelIndex LevelIndex::overflow() {
    return LevelIndex(kOverflowLevel, 1.0, 0);
}

LevelIndex LevelIndex::normalized(int level, double r) {
    if (std::isnan(r) || std::isinf(r)) {
        throw DomainError("LevelIndex::normalized requires a finite mantissa");
    }
    if (level == 0 && r < 0.0) {
        throw DomainError("LevelIndex value must be nonnegative");
    }
    // Collapse down while the value still fits in a double.
    while (level > 0 && r <= kMaxExpArg) {
        r = std::exp(r);
        --level;
    }
    if (level == 0) return LevelIndex(0, r, 0);
    // Value exceeds double range: bring the mantissa into [1, e).
    while (r >= kE) {
        r = std::log(r);
        ++level;
    }
    while (r < 1.0) {
        r = std::exp(r);
        --level;
    }
    if (level > kMaxLevel) return overflow();
    return LevelIndex(level, r, 0);
}

double LevelIndex::to_double() const {
    if (level_ == 0) return mantissa_;
    return std::numeric_limits<double>::infinity();
}

std::string LevelIndex::str() const {
    std::ostringstream os;
    os.precision(17);
    if (is_overflow()) {
        os << "overflow";
    } else if (level_ == 0) {
        os << mantissa_;
    } else {
        os << "E^" << level_ << "(" << mantissa_ << ")";
    }
    return os.str();
}

std::strong_ordering operator<=>(const LevelIndex& a, const LevelIndex& b) {
    if (a.is_overflow() || b.is_overflow()) {
        return (a.is_overflow() ? 1 : 0) <=> (b.is_overflow() ? 1 : 0);
    }
    // Levels >= 1 only hold values past DBL_MAX, and their mantissas in [1, e)
    // tile [exp^l(1), exp^(l+1)(1)), so (level, mantissa) sorts lexicographically.
    if (a.level_ != b.level_) return a.level_ <=> b.level_;
    if (a.mantissa_ < b.mantissa_) return std::strong_ordering::less;
    if (a.mantissa_ > b.mantissa_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

namespace {

// ln of an extended-range value. Only called for values > 1.
LevelIndex li_ln_big(const LevelIndex& x) {
    if (x.fits_double()) return LevelIndex::normalized(0, std::log(x.mantissa()));
    return LevelIndex::normalized(x.level() - 1, x.mantissa());
}

LevelIndex li_exp(const LevelIndex& x) {
    if (x.is_overflow()) return LevelIndex::overflow();
    if (x.fits_double()) return LevelIndex::normalized(1, x.mantissa());
    if (x.level() + 1 > LevelIndex::kMaxLevel) return LevelIndex::overflow();
    return LevelIndex::normalized(x.level() + 1, x.mantissa());
}

// Product of two positive extended-range values. Once a factor's logarithm
// stops being resolvable next to the other's, it is absorbed.
LevelIndex li_mul(const LevelIndex& x, const LevelIndex& y) {
    if (x.is_overflow() || y.is_overflow()) return LevelIndex::overflow();
    if (x.fits_double() && y.fits_double()) {
        double p = x.mantissa() * y.mantissa();
        if (std::isfinite(p)) return LevelIndex(p);
        return LevelIndex::normalized(1, std::log(x.mantissa()) + std::log(y.mantissa()));
    }
    const LevelIndex& big = (x < y) ? y : x;
    const LevelIndex& small = (x < y) ? x : y;
    if (small.fits_double() && small.mantissa() == 0.0) return LevelIndex(0.0);
    LevelIndex lb = li_ln_big(big);
    if (!lb.fits_double()) return big;  // ln(small) cannot register against ln(big)
    double ln_small = small.fits_double() ? std::log(small.mantissa())
                                          : li_ln_big(small).to_double();
    if (std::isinf(ln_small)) return big;
    return LevelIndex::normalized(1, lb.mantissa() + ln_small);
}

}  // namespace

LevelIndex li_pow(double base, const LevelIndex& exponent) {
    if (!(base > 0.0) || std::isinf(base)) {
        throw DomainError("li_pow requires a finite base > 0");
    }
    if (base == 1.0) return LevelIndex(1.0);
    if (exponent.is_overflow()) {
        if (base > 1.0) return LevelIndex::overflow();
        return LevelIndex(0.0);  // lim base^t = 0 for base < 1
    }
    const double lnb = std::log(base);
    if (exponent.fits_double()) {
        const double m = exponent.mantissa();
        // ln(result) = lnb * m; guard the product itself against overflow.
        if (std::fabs(lnb) > 1.0 && m > std::numeric_limits<double>::max() / std::fabs(lnb)) {
            if (lnb < 0.0) return LevelIndex(0.0);
            return LevelIndex::normalized(2, std::log(lnb) + std::log(m));
        }
        const double t = lnb * m;
        if (t > kMaxExpArg) return LevelIndex::normalized(1, t);
        const double direct = std::pow(base, m);
        if (std::isinf(direct)) return LevelIndex::normalized(1, t);  // rounding at the edge
        return LevelIndex(direct);
    }
    // Exponent exceeds double range.
    if (base < 1.0) return LevelIndex(0.0);
    LevelIndex lnv = li_ln_big(exponent);
    if (lnv.fits_double()) {
        return LevelIndex::normalized(2, lnv.mantissa() + std::log(lnb));
    }
    return li_exp(li_exp(lnv));  // ln(base) is absorbed at this scale
}

LevelIndex li_pow(const LevelIndex& base, const LevelIndex& exponent) {
    if (base.is_overflow()) {
        if (exponent.fits_double() && exponent.mantissa() == 0.0) return LevelIndex(1.0);
        return LevelIndex::overflow();
    }
    if (base.fits_double()) return li_pow(base.mantissa(), exponent);
    if (exponent.fits_double() && exponent.mantissa() == 0.0) return LevelIndex(1.0);
    if (exponent.is_overflow()) return LevelIndex::overflow();
    return li_exp(li_mul(exponent, li_ln_big(base)));
}

LevelIndex tetrate(double c, int n) {
    if (!(c > 0.0)) throw DomainError("tetrate requires c > 0");
    if (n < 0) throw DomainError("tetrate requires n >= 0");
    LevelIndex t(1.0);
    for (int i = 0; i < n; ++i) {
        t = li_pow(c, t);
        if (t.is_overflow()) break;  // saturated; further powers stay saturated
    }
    return t;
}

int log_star(const LevelIndex& x) {
    int n = 0;
    LevelIndex t(1.0);
    while (t < x) {
        t = li_pow(kE, t);
        ++n;
        if (t.is_overflow()) break;
    }
    return n;
}

}  // namespace towerlab
