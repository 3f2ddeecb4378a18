#pragma once

#include <stdexcept>
#include <string>

namespace apflow {

/// Density (or a damped Newton iterate) lost positivity.
struct PositivityError : std::runtime_error {
    explicit PositivityError(const std::string& what) : std::runtime_error(what) {}
};

/// Newton iteration exhausted its budget without meeting the tolerance.
struct NonConvergenceError : std::runtime_error {
    NonConvergenceError(const std::string& what, int iters, double residual)
        : std::runtime_error(what), iterations(iters), final_residual(residual) {}
    int iterations;
    double final_residual;
};

/// A time step failed; carries the simulation time and step index at failure.
struct StepError : std::runtime_error {
    StepError(const std::string& what, double t, int step)
        : std::runtime_error(what), time(t), step_index(step) {}
    double time;
    int step_index;
};

struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace apflow
