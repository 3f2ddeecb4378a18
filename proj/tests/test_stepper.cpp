#include <doctest.h>

#include <cmath>

#include "apflow/errors.hpp"
#include "apflow/ops.hpp"
#include "apflow/stepper.hpp"
#include "support/reference_scheme.hpp"
#include "support/test_util.hpp"

using namespace apflow;
using namespace apflow::testutil;

namespace {

// defect of the implicit mass update on a returned state pair
double mass_update_defect(const ConservedField& before, const ConservedField& after, double dt) {
    const ScalarField div = central_divergence(VectorField{after.q1, after.q2});
    double worst = 0.0;
    for (int k = 0; k < before.rho.size(); ++k) {
        worst = std::max(worst, std::abs(after.rho.data()[k] - before.rho.data()[k] +
                                         dt * div.data()[k]));
    }
    return worst;
}

}  // namespace

TEST_SUITE("stepper") {

TEST_CASE("compute_dt") {
    const GridSpec g = GridSpec::unit_square(50, 50);
    StepConfig cfg;

    ConservedField rest(g);  // rho=1, q=0
    CHECK(compute_dt(rest, cfg) == cfg.dt_max);

    ConservedField moving(g);
    for (int k = 0; k < g.ncells(); ++k) {
        moving.q1.data()[k] = 1.5;
        moving.q2.data()[k] = -0.5;
    }
    // s = 2, dx = 0.02, cfl = 0.45 -> dt = 0.0045
    CHECK(compute_dt(moving, cfg) == doctest::Approx(0.0045).epsilon(1e-14));

    // doubling the resolution halves dt
    const GridSpec g2 = GridSpec::unit_square(100, 100);
    ConservedField moving2(g2);
    for (int k = 0; k < g2.ncells(); ++k) {
        moving2.q1.data()[k] = 1.5;
        moving2.q2.data()[k] = -0.5;
    }
    CHECK(compute_dt(moving2, cfg) == doctest::Approx(0.00225).epsilon(1e-14));

    StepConfig bad = cfg;
    bad.cfl = 1.7;
    CHECK_THROWS_AS(compute_dt(rest, bad), std::invalid_argument);
    CHECK_THROWS_AS(step(rest, 0.0, RegimeParams{}, cfg), std::invalid_argument);
    CHECK_THROWS_AS(step(rest, -0.1, RegimeParams{}, cfg), std::invalid_argument);
}

TEST_CASE("uniform state without gravity is a fixed point") {
    const GridSpec g = GridSpec::unit_square(16, 16);
    RegimeParams p;
    p.gravity_on = false;
    StepConfig cfg;
    const ConservedField state(g);  // rho=1, q=0
    const ConservedField next = step(state, 0.005, p, cfg);
    CHECK(max_abs_diff(next.rho, state.rho) <= 10.0 * cfg.newton_tol);
    CHECK(max_abs(next.q1) <= 10.0 * cfg.newton_tol);
    CHECK(max_abs(next.q2) <= 10.0 * cfg.newton_tol);
}

TEST_CASE("uniform state with gravity free-falls at the source rate") {
    const GridSpec g = GridSpec::unit_square(16, 16);
    RegimeParams p;
    p.alpha = 0;
    p.gravity_on = true;
    StepConfig cfg;
    const double dt = 0.004;
    const ConservedField state(g);
    const ConservedField next = step(state, dt, p, cfg);
    CHECK(max_abs_diff(next.rho, ScalarField(g, 1.0)) <= 10.0 * cfg.newton_tol);
    CHECK(max_abs(next.q1) <= 10.0 * cfg.newton_tol);
    // q2 = -dt * rho^{n+1}, uniformly
    double worst = 0.0;
    for (int k = 0; k < g.ncells(); ++k)
        worst = std::max(worst, std::abs(next.q2.data()[k] + dt));
    CHECK(worst <= 10.0 * cfg.newton_tol);
}

TEST_CASE("one step matches the dense-assembled reference implementation") {
    const GridSpec g = GridSpec::unit_square(16, 16);
    StepConfig cfg;
    cfg.newton_tol = 1e-12;

    SUBCASE("eps = 1, gravity off") {
        RegimeParams p;
        p.eps = 1.0;
        p.gravity_on = false;
        const ConservedField state = well_prepared_init(g, 1.0);
        const double dt = 0.5 * compute_dt(state, cfg);
        const ConservedField mine = step(state, dt, p, cfg);
        const ConservedField oracle = testref::reference_step(state, dt, p, 1e-13);
        CHECK(max_abs_diff(mine.rho, oracle.rho) <= 1e-8);
        CHECK(max_abs_diff(mine.q1, oracle.q1) <= 1e-8);
        CHECK(max_abs_diff(mine.q2, oracle.q2) <= 1e-8);
    }
    SUBCASE("eps = 1, gravity on, Boussinesq scaling") {
        RegimeParams p;
        p.eps = 1.0;
        p.alpha = 1;
        p.gravity_on = true;
        const ConservedField state = well_prepared_init(g, 1.0);
        const double dt = 0.5 * compute_dt(state, cfg);
        const ConservedField mine = step(state, dt, p, cfg);
        const ConservedField oracle = testref::reference_step(state, dt, p, 1e-13);
        CHECK(max_abs_diff(mine.rho, oracle.rho) <= 1e-8);
        CHECK(max_abs_diff(mine.q1, oracle.q1) <= 1e-8);
        CHECK(max_abs_diff(mine.q2, oracle.q2) <= 1e-8);
    }
}

TEST_CASE("the discrete mass update holds to solver tolerance") {
    const GridSpec g = GridSpec::unit_square(32, 32);
    RegimeParams p;
    p.eps = 0.1;
    StepConfig cfg;
    const ConservedField state = well_prepared_init(g, p.eps);
    const double dt = compute_dt(state, cfg);
    const ConservedField next = step(state, dt, p, cfg);
    CHECK(mass_update_defect(state, next, dt) <= 10.0 * cfg.newton_tol);

    // total mass is conserved by telescoping
    CHECK(std::abs(field_sum(next.rho) - field_sum(state.rho)) <=
          10.0 * cfg.newton_tol * g.ncells());
}

TEST_CASE("step count and stability are uniform in eps") {
    const GridSpec g = GridSpec::unit_square(32, 32);
    StepConfig cfg;
    std::vector<int> counts;
    for (double eps : {1e-1, 1e-2, 1e-3}) {
        RegimeParams p;
        p.eps = eps;
        const RunResult res = run(well_prepared_init(g, eps), p, cfg, 0.25, 1 << 20);
        counts.push_back(res.steps);
        CHECK(res.series.back().umax <= 2.0 * res.series.front().umax);
    }
    CHECK(counts[0] == counts[1]);
    CHECK(counts[1] == counts[2]);
}

TEST_CASE("run clips the final step onto t_final") {
    const GridSpec g = GridSpec::unit_square(16, 16);
    RegimeParams p;
    p.gravity_on = false;
    StepConfig cfg;
    const ConservedField state(g);  // dt would be dt_max = 1e-2
    const RunResult res = run(state, p, cfg, 1e-3);
    CHECK(res.steps == 1);
    CHECK(res.series.back().t == 1e-3);
}

TEST_CASE("run holds a uniform fixed point over many steps") {
    const GridSpec g = GridSpec::unit_square(16, 16);
    RegimeParams p;
    p.gravity_on = false;
    StepConfig cfg;
    ConservedField state(g);
    for (int k = 0; k < g.ncells(); ++k) state.rho.data()[k] = 1.2;
    int observer_calls = 0;
    std::vector<int> observed_steps;
    const RunResult res = run(state, p, cfg, 0.1, 4,
                              [&](const ConservedField&, double, int s) {
                                  ++observer_calls;
                                  observed_steps.push_back(s);
                              });
    CHECK(res.steps == 10);
    CHECK(max_abs_diff(res.final_state.rho, state.rho) <= 1e-8);
    CHECK(max_abs(res.final_state.q1) <= 1e-8);
    CHECK(res.series.front().t == 0.0);
    CHECK(res.series.back().t == 0.1);
    // sampled at step 0, every 4th step, and the final step
    CHECK(observed_steps == std::vector<int>{0, 4, 8, 10});
    CHECK(res.series.size() == 4);
    CHECK(observer_calls == 4);
}

TEST_CASE("well-prepared run keeps the velocity bounded") {
    const GridSpec g = GridSpec::unit_square(32, 32);
    RegimeParams p;
    p.eps = 0.1;
    StepConfig cfg;
    const RunResult res = run(well_prepared_init(g, p.eps), p, cfg, 0.5, 16);
    CHECK(res.series.back().umax <= 2.0 * res.series.front().umax);
    for (const auto& s : res.series) CHECK(std::isfinite(s.umax));
}

TEST_CASE("step failures carry the failing time") {
    const GridSpec g = GridSpec::unit_square(16, 16);
    RegimeParams p;
    StepConfig cfg;
    cfg.newton_max = 1;
    cfg.newton_tol = 1e-30;  // unreachable
    const ConservedField state = well_prepared_init(g, 0.1);
    try {
        run(state, p, cfg, 0.1);
        FAIL("expected StepError");
    } catch (const StepError& e) {
        CHECK(e.step_index == 1);
        CHECK(e.time == 0.0);
    }
}

}  // TEST_SUITE
