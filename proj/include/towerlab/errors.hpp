// Copyright 2026 the towerlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOWERLAB_ERRORS_HPP_
#define TOWERLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace towerlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// An iteration failed to stabilize within its cap.
struct ConvergenceError : Error {
    using Error::Error;
};

// Support bounds with a > b or b <= 0.
struct InvalidBounds : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

// Distribution lacks the analytic structure an operation needs.
struct UnsupportedDistribution : Error {
    using Error::Error;
};

// Inverse-tower parameters outside the feasible region.
struct InfeasibleParams : Error {
    using Error::Error;
};

struct InsufficientSamples : Error {
    using Error::Error;
};

// The (0,1) support corner where only one-sided bounds exist.
struct DegenerateCase : Error {
    using Error::Error;
};

}  // namespace towerlab

#endif  // TOWERLAB_ERRORS_HPP_
