#include "apflow/driver.hpp"

#include <future>

namespace apflow {

RegimeParams regime_from(const RunConfig& cfg) {
    RegimeParams p;
    p.eps = cfg.eps;
    p.alpha = cfg.alpha;
    p.gamma_eos = cfg.gamma_eos;
    p.gravity_on = cfg.gravity_on;
    p.validate();
    return p;
}

StepConfig step_config_from(const RunConfig& cfg) {
    StepConfig s;
    s.cfl = cfg.cfl;
    s.dt_max = cfg.dt_max;
    s.newton_tol = cfg.newton_tol;
    s.newton_max = cfg.newton_max;
    s.validate();
    return s;
}

ConservedField initial_state(const RunConfig& cfg) {
    return well_prepared_init(GridSpec::unit_square(cfg.nx, cfg.ny), cfg.eps);
}

RunResult run_case(const RunConfig& cfg, const StepObserver& observer) {
    return run(initial_state(cfg), regime_from(cfg), step_config_from(cfg), cfg.t_final,
               cfg.output_every, observer);
}

namespace {
SweepRow sweep_point(RunConfig cfg, double eps) {
    cfg.eps = eps;
    const RunResult res = run_case(cfg);
    SweepRow row;
    row.eps = eps;
    row.steps = res.steps;
    row.rho_dev_inf = res.series.back().rho_dev_inf;
    row.div_inf = res.series.back().div_inf;
    row.umax_initial = res.series.front().umax;
    row.umax_final = res.series.back().umax;
    return row;
}
}  // namespace

std::vector<SweepRow> sweep_eps(const RunConfig& base, const std::vector<double>& eps_values,
                                bool parallel) {
    std::vector<SweepRow> rows(eps_values.size());
    if (parallel) {
        std::vector<std::future<SweepRow>> futures;
        futures.reserve(eps_values.size());
        for (double e : eps_values) {
            futures.push_back(std::async(std::launch::async, sweep_point, base, e));
        }
        for (std::size_t k = 0; k < futures.size(); ++k) rows[k] = futures[k].get();
    } else {
        for (std::size_t k = 0; k < eps_values.size(); ++k) rows[k] = sweep_point(base, eps_values[k]);
    }
    return rows;
}

}  // namespace apflow
