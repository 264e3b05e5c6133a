#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsh {

// Adaptive quadrature ran out of its subdivision budget. Carries the
// partial estimate and its error bound so callers can decide whether the
// result is still usable.
class QuadratureFailure : public std::runtime_error {
public:
    QuadratureFailure(const std::string& what, double partial, double error_estimate)
        : std::runtime_error(what), partial_estimate(partial), error_estimate(error_estimate) {}

    double partial_estimate;
    double error_estimate;
};

// Geometric bracket expansion failed to enclose a sign change.
class BracketingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rejection sampler exceeded its iteration guard.
class SamplerError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Simulation state became non-finite. Reports the offending step.
class SimulationError : public std::runtime_error {
public:
    SimulationError(const std::string& what, std::size_t step)
        : std::runtime_error(what + " at step " + std::to_string(step)), step(step) {}

    std::size_t step;
};

// Requested quantity is undefined in the current regime (e.g. stationary
// mean with a nonpositive threshold, optimal policy with A <= 0).
class RegimeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace tsh
