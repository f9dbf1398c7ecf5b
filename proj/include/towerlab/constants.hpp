// Copyright 2026 the towerlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOWERLAB_CONSTANTS_HPP_
#define TOWERLAB_CONSTANTS_HPP_

#include <cmath>
#include <limits>

namespace towerlab {

inline constexpr double kE = 2.718281828459045235360287471353;

// e^(1/e), the upper edge of the deterministic convergence interval.
inline const double kEToInvE = std::exp(1.0 / kE);

// e^(-e), the lower edge; below it deterministic towers oscillate.
inline const double kEToMinusE = std::exp(-kE);

// Largest x with exp(x) finite in IEEE double.
inline const double kMaxExpArg = std::log(std::numeric_limits<double>::max());

inline constexpr const char* kVersion = "0.1.0";

}  // namespace towerlab

#endif  // TOWERLAB_CONSTANTS_HPP_
