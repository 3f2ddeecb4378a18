#pragma once

#include "apflow/csv_io.hpp"
#include "apflow/run_config.hpp"
#include "apflow/stepper.hpp"

namespace apflow {

RegimeParams regime_from(const RunConfig& cfg);
StepConfig step_config_from(const RunConfig& cfg);

/// Well-prepared initial data on the configured grid.
ConservedField initial_state(const RunConfig& cfg);

/// Runs the configured case; observables sampled every cfg.output_every steps.
RunResult run_case(const RunConfig& cfg, const StepObserver& observer = {});

/// Re-runs the base config across eps values (everything else fixed) and
/// summarises the final observables per eps. With parallel=true the runs
/// execute concurrently; they share no mutable state.
std::vector<SweepRow> sweep_eps(const RunConfig& base, const std::vector<double>& eps_values,
                                bool parallel = false);

}  // namespace apflow
