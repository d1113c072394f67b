#pragma once

#include <stdexcept>
#include <string>

namespace levyfluct {

/// Input outside the mathematical domain of an operation (x <= 0, gamma <= 0, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Structurally invalid argument (wrong model variant, malformed range, ...).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Numerical inversion failed its internal cross-check.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Adaptive quadrature could not reach the requested tolerance.
struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A quantity violated a bound it must satisfy analytically (probability far
/// outside [0,1]); indicates an accuracy failure upstream, never clamped over.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Simulation/CLI configuration that cannot be run (incompatible stopping
/// rule, horizon too short, unreadable config file).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace levyfluct
