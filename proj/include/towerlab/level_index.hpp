// Copyright 2026 the towerlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOWERLAB_LEVEL_INDEX_HPP_
#define TOWERLAB_LEVEL_INDEX_HPP_

#include <compare>
#include <cstdint>
#include <string>

namespace towerlab {

/// Extended-range nonnegative real stored as (level, mantissa), meaning
/// exp applied `level` times to `mantissa`.
///
/// Canonical form keeps every value that fits in a finite double at level 0
/// (so conversion from/to double is exact); levels >= 1 carry a mantissa in
/// [1, e) and are used only for values past DBL_MAX. Growth saturates at
/// `kMaxLevel` into an Overflow sentinel ordered above all finite values.
class LevelIndex {
  public:
    static constexpr int kMaxLevel = 64;

    LevelIndex() : level_(0), mantissa_(0.0) {}
    LevelIndex(double v);  // NOLINT(google-explicit-constructor)

    static LevelIndex overflow();

    /// Canonicalizes "exp applied `level` times to `r`" (r >= 0, finite).
    static LevelIndex normalized(int level, double r);

    int level() const { return level_; }
    double mantissa() const { return mantissa_; }
    bool is_overflow() const { return level_ > kMaxLevel; }
    bool fits_double() const { return level_ == 0; }

    /// Exact for level 0; +inf for anything larger.
    double to_double() const;

    std::string str() const;

    friend bool operator==(const LevelIndex& a, const LevelIndex& b) {
        return a.level_ == b.level_ && (a.is_overflow() || a.mantissa_ == b.mantissa_);
    }
    friend std::strong_ordering operator<=>(const LevelIndex& a, const LevelIndex& b);

  private:
    LevelIndex(int level, double mantissa, int) : level_(level), mantissa_(mantissa) {}

    int level_;
    double mantissa_;
};

/// base^exponent in level-index space. Requires base > 0. A level-0 result is
/// computed with plain double arithmetic; overflowing values move up levels.
LevelIndex li_pow(double base, const LevelIndex& exponent);

/// Same with an extended-range base (towers whose draws exceed double range).
LevelIndex li_pow(const LevelIndex& base, const LevelIndex& exponent);

/// c tetrated n times; tetrate(c, 0) == 1 (empty tower).
LevelIndex tetrate(double c, int n);

/// Smallest n with tetrate(e, n) >= x. log_star(x) == 0 for x <= 1.
int log_star(const LevelIndex& x);

}  // namespace towerlab

#endif  // TOWERLAB_LEVEL_INDEX_HPP_
