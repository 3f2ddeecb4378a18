#include "apflow/stepper.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "apflow/errors.hpp"
#include "apflow/ops.hpp"

namespace apflow {

void StepConfig::validate() const {
    if (!(cfl > 0.0 && cfl < 1.0)) throw std::invalid_argument("StepConfig: cfl must be in (0,1)");
    if (!(dt_max > 0.0)) throw std::invalid_argument("StepConfig: dt_max must be > 0");
    if (!(newton_tol > 0.0)) throw std::invalid_argument("StepConfig: newton_tol must be > 0");
    if (newton_max < 1) throw std::invalid_argument("StepConfig: newton_max must be >= 1");
}

double compute_dt(const ConservedField& state, const StepConfig& cfg) {
    cfg.validate();
    const GridSpec& g = state.grid();
    const double s = max_convective_speed(state);
    if (s <= 0.0) return cfg.dt_max;
    return std::min(cfg.cfl * std::min(g.dx1, g.dx2) / s, cfg.dt_max);
}

ConservedField step(const ConservedField& state_n, double dt, const RegimeParams& params,
                    const StepConfig& cfg) {
    if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be > 0");
    params.validate();
    const GridSpec& g = state_n.grid();

    const ConvectiveUpdate conv = rusanov_convective_divergence(state_n);
    EllipticProblem prob{assemble_rhs(state_n, conv, dt), dt, params, g};
    auto [rho_next, stats] = solve_elliptic(prob, state_n.rho, cfg.newton_tol, cfg.newton_max);

    const VectorField grad_p = central_gradient(pressure(rho_next, params.gamma_eos));

    ConservedField next(g);
    next.rho = std::move(rho_next);

    const double cpg = dt / (params.eps * params.eps);
    const double cgrav = params.gravity_on ? dt / params.eps_alpha() : 0.0;
    const double* q1 = state_n.q1.data();
    const double* q2 = state_n.q2.data();
    const double* c1 = conv.d1.data();
    const double* c2 = conv.d2.data();
    const double* gp1 = grad_p.c1.data();
    const double* gp2 = grad_p.c2.data();
    const double* rn = next.rho.data();
    double* o1 = next.q1.data();
    double* o2 = next.q2.data();
    const int n = g.ncells();
#pragma omp parallel for
    for (int k = 0; k < n; ++k) {
        o1[k] = q1[k] - dt * c1[k] - cpg * gp1[k];
        o2[k] = q2[k] - dt * c2[k] - cpg * gp2[k] - cgrav * rn[k];
    }
    return next;
}

RunResult run(const ConservedField& init, const RegimeParams& params, const StepConfig& cfg,
              double t_final, int observe_every, const StepObserver& observer) {
    if (!(t_final > 0.0)) throw std::invalid_argument("run: t_final must be > 0");
    if (observe_every < 1) throw std::invalid_argument("run: observe_every must be >= 1");
    cfg.validate();

    RunResult result;
    result.final_state = init;
    result.series.push_back(observe(result.final_state, 0.0));
    if (observer) observer(result.final_state, 0.0, 0);

    double t = 0.0;
    int step_index = 0;
    while (t < t_final) {
        double dt = compute_dt(result.final_state, cfg);
        bool last = false;
        // clip onto t_final, absorbing roundoff-sized remainders so the run
        // never ends on a degenerate micro-step
        if (dt >= (t_final - t) - 1e-12 * t_final) {
            dt = t_final - t;
            last = true;
        }
        try {
            result.final_state = step(result.final_state, dt, params, cfg);
        } catch (const PositivityError& e) {
            throw StepError("step " + std::to_string(step_index + 1) + " failed at t = " +
                                std::to_string(t) + ": " + e.what(),
                            t, step_index + 1);
        } catch (const NonConvergenceError& e) {
            throw StepError("step " + std::to_string(step_index + 1) + " failed at t = " +
                                std::to_string(t) + ": " + e.what(),
                            t, step_index + 1);
        }
        ++step_index;
        t = last ? t_final : t + dt;
        if (last || step_index % observe_every == 0) {
            result.series.push_back(observe(result.final_state, t));
            if (observer) observer(result.final_state, t, step_index);
        }
    }
    result.steps = step_index;
    return result;
}

}  // namespace apflow
