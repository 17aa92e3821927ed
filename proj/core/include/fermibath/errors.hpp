// errors.hpp — Exception types shared across the library

#pragma once

#include <stdexcept>

namespace fermibath {

// Mismatched shapes, unknown symbols, malformed inputs.
struct StructuralError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A run parameter violates a precondition (step size, grid coverage, ...).
struct ConfigurationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A propagated state broke a density-matrix invariant.
struct NumericalInstabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An iterative solve did not reach its residual target in time.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A cross-check between two independent computations disagreed.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace fermibath
