#pragma once

#include <functional>
#include <vector>

#include "apflow/diagnostics.hpp"
#include "apflow/elliptic.hpp"

namespace apflow {

struct StepConfig {
    double cfl = 0.45;
    double dt_max = 1e-2;  // cap for degenerate zero-velocity states
    double newton_tol = 1e-10;
    int newton_max = 50;

    void validate() const;
};

/// dt = min(cfl * min(dx1,dx2) / s, dt_max) with s = max_convective_speed.
/// eps does not appear: the acoustic terms are implicit.
double compute_dt(const ConservedField& state, const StepConfig& cfg);

/// One first-order semi-implicit step: explicit Rusanov convective update,
/// elliptic solve for the new density, then an explicit momentum evaluation.
/// The returned state satisfies the discrete mass update
///   rho^{n+1} = rho^n - dt * central_divergence(q^{n+1})
/// up to 10x the elliptic tolerance.
ConservedField step(const ConservedField& state_n, double dt, const RegimeParams& params,
                    const StepConfig& cfg);

using StepObserver = std::function<void(const ConservedField& state, double t, int step)>;

struct RunResult {
    ConservedField final_state;
    std::vector<ApObservables> series;
    int steps = 0;
};

/// Advances to t_final with compute_dt per step; the last step is clipped to
/// land exactly on t_final. Observables are recorded (and the observer called)
/// at t = 0, every `observe_every` steps, and at the final step. Step failures
/// are rethrown as StepError with the failing time attached.
RunResult run(const ConservedField& init, const RegimeParams& params, const StepConfig& cfg,
              double t_final, int observe_every = 1, const StepObserver& observer = {});

}  // namespace apflow
