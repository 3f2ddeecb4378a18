#include <doctest.h>

#include <cmath>

#include "apflow/errors.hpp"
#include "apflow/fluxes.hpp"
#include "apflow/ops.hpp"
#include "apflow/ref_kernels.hpp"
#include "support/test_util.hpp"

using namespace apflow;
using namespace apflow::testutil;

TEST_SUITE("fluxes") {

TEST_CASE("uniform states produce an exactly zero convective update") {
    const GridSpec g = GridSpec::unit_square(16, 16);
    ConservedField state(g);
    for (int k = 0; k < g.ncells(); ++k) {
        state.rho.data()[k] = 1.7;
        state.q1.data()[k] = 0.4;
        state.q2.data()[k] = -2.3;
    }
    const ConvectiveUpdate upd = rusanov_convective_divergence(state);
    CHECK(max_abs(upd.d1) == 0.0);
    CHECK(max_abs(upd.d2) == 0.0);
}

TEST_CASE("zero momentum produces a zero update") {
    const GridSpec g = GridSpec::unit_square(12, 12);
    ConservedField state(g);
    for (int k = 0; k < g.ncells(); ++k) state.rho.data()[k] = 0.5 + 0.1 * (k % 5);
    const ConvectiveUpdate upd = rusanov_convective_divergence(state);
    CHECK(max_abs(upd.d1) == 0.0);
    CHECK(max_abs(upd.d2) == 0.0);
}

TEST_CASE("1D velocity jump reproduces the hand-evaluated face flux") {
    // rho = 1, u1 = 1 for i < nx/2 and 0 otherwise, u2 = 0.
    // At the jump face: 1/2 (1*1 + 0*0) - 1/2 * 1 * (0 - 1) = 1.
    const int nx = 8, ny = 4;
    const GridSpec g = GridSpec::unit_square(nx, ny);
    ConservedField state(g);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) state.q1(i, j) = (i < nx / 2) ? 1.0 : 0.0;

    const ConvectiveUpdate upd = rusanov_convective_divergence(state);

    // cell 3 has the jump face (value 1) on its right and flux u^2 = 1 on its left
    CHECK(upd.d1(3, 0) == doctest::Approx((1.0 - 1.0) / g.dx1));
    // cell 4: right face flux 0, left face is the jump face
    CHECK(upd.d1(4, 0) == doctest::Approx((0.0 - 1.0) / g.dx1));
    // wrap-around jump between cell 7 (u=0) and cell 0 (u=1): flux = 1/2*0 + 1/2*1*1 = ...
    const double f_wrap = 0.5 * (0.0 * 0.0 + 1.0 * 1.0) - 0.5 * 1.0 * (1.0 - 0.0);
    CHECK(f_wrap == 0.0);
    CHECK(upd.d1(0, 0) == doctest::Approx((1.0 - 0.0) / g.dx1));
    CHECK(max_abs(upd.d2) == 0.0);

    // cross-check the whole field against the scalar per-face reference
    const ConvectiveUpdate ref_upd = ref::rusanov_convective_divergence(state);
    CHECK(max_abs_diff(upd.d1, ref_upd.d1) <= 1e-14);
    CHECK(max_abs_diff(upd.d2, ref_upd.d2) <= 1e-14);
}

TEST_CASE("update is conservative over the periodic domain") {
    const GridSpec g(24, 18, 0.0, 1.0, 0.0, 1.5);
    ConservedField state(g);
    state.rho = random_field(g, 5u, 0.5, 2.0);
    state.q1 = random_field(g, 6u);
    state.q2 = random_field(g, 7u);
    const ConvectiveUpdate upd = rusanov_convective_divergence(state);

    double abs1 = 0.0, abs2 = 0.0;
    for (int k = 0; k < g.ncells(); ++k) {
        abs1 += std::abs(upd.d1.data()[k]);
        abs2 += std::abs(upd.d2.data()[k]);
    }
    CHECK(std::abs(field_sum(upd.d1) * g.cell_area()) <= 1e-12 * abs1 * g.cell_area() + 1e-15);
    CHECK(std::abs(field_sum(upd.d2) * g.cell_area()) <= 1e-12 * abs2 * g.cell_area() + 1e-15);
}

TEST_CASE("transposing the grid and swapping components commutes with the operator") {
    const int n = 14;
    const GridSpec g = GridSpec::unit_square(n, n);
    ConservedField state(g);
    state.rho = random_field(g, 31u, 0.5, 2.0);
    state.q1 = random_field(g, 32u);
    state.q2 = random_field(g, 33u);

    ConservedField transposed(g);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            transposed.rho(i, j) = state.rho(j, i);
            transposed.q1(i, j) = state.q2(j, i);
            transposed.q2(i, j) = state.q1(j, i);
        }
    }
    const ConvectiveUpdate a = rusanov_convective_divergence(state);
    const ConvectiveUpdate b = rusanov_convective_divergence(transposed);
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            worst = std::max(worst, std::abs(b.d1(i, j) - a.d2(j, i)));
            worst = std::max(worst, std::abs(b.d2(i, j) - a.d1(j, i)));
        }
    }
    CHECK(worst == 0.0);
}

TEST_CASE("update matches the serial reference on random states") {
    const GridSpec g = GridSpec::unit_square(20, 20);
    ConservedField state(g);
    state.rho = random_field(g, 55u, 0.3, 3.0);
    state.q1 = random_field(g, 56u, -2.0, 2.0);
    state.q2 = random_field(g, 57u, -2.0, 2.0);
    const ConvectiveUpdate a = rusanov_convective_divergence(state);
    const ConvectiveUpdate b = ref::rusanov_convective_divergence(state);
    CHECK(max_abs_diff(a.d1, b.d1) <= 1e-12);
    CHECK(max_abs_diff(a.d2, b.d2) <= 1e-12);
}

TEST_CASE("max_convective_speed") {
    const GridSpec g = GridSpec::unit_square(10, 10);
    ConservedField state(g);  // rho=1, q=0
    CHECK(max_convective_speed(state) == 0.0);

    for (int k = 0; k < g.ncells(); ++k) {
        state.q1.data()[k] = 1.0;
        state.q2.data()[k] = -2.0;
    }
    CHECK(max_convective_speed(state) == 3.0);

    state.rho(2, 2) = -0.1;
    CHECK_THROWS_AS(max_convective_speed(state), PositivityError);
}

TEST_CASE("max_convective_speed of the 50x50 well-prepared state at eps=0.1") {
    const GridSpec g = GridSpec::unit_square(50, 50);
    const ConservedField state = well_prepared_init(g, 0.1);
    const double s = max_convective_speed(state);
    CHECK(s == doctest::Approx(ref::max_convective_speed(state)).epsilon(1e-15));
    // leading term 2|sin(2 pi (x1-x2))| tops out just below 2 on this grid
    CHECK(s > 1.95);
    CHECK(s < 2.1);
}

}  // TEST_SUITE
