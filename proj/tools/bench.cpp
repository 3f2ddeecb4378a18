// Timing comparison between the serial reference kernels and the
// OpenMP-parallel production kernels, plus a full solver step.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "apflow/fluxes.hpp"
#include "apflow/ops.hpp"
#include "apflow/ref_kernels.hpp"
#include "apflow/stepper.hpp"

using namespace apflow;
using clock_type = std::chrono::steady_clock;

namespace {

double checksum = 0.0;

template <class F>
double time_ms(int reps, F&& f) {
    f();  // warm up
    const auto t0 = clock_type::now();
    for (int r = 0; r < reps; ++r) f();
    const auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s %10.3f ms %10.3f ms %8.2fx\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
    int n = 256;
    int reps = 20;
    CLI::App app{"kernel benchmark: serial reference vs OpenMP"};
    app.add_option("--n", n, "grid size (n x n)")->check(CLI::Range(8, 8192))->capture_default_str();
    app.add_option("--reps", reps, "repetitions per kernel")
        ->check(CLI::Range(1, 10000))
        ->capture_default_str();
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP\n");
#endif
    std::printf("grid %dx%d, %d reps\n\n", n, n, reps);
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial ref", "omp", "speedup");

    const GridSpec grid = GridSpec::unit_square(n, n);
    const ConservedField state = well_prepared_init(grid, 0.1);
    const ScalarField& f = state.rho;

    report("central_gradient",
           time_ms(reps, [&] { checksum += ref::central_gradient(f).c1(0, 0); }),
           time_ms(reps, [&] { checksum += central_gradient(f).c1(0, 0); }));

    const VectorField v = central_gradient(f);
    report("central_divergence",
           time_ms(reps, [&] { checksum += ref::central_divergence(v)(0, 0); }),
           time_ms(reps, [&] { checksum += central_divergence(v)(0, 0); }));

    report("laplacian",
           time_ms(reps, [&] { checksum += ref::laplacian(f)(0, 0); }),
           time_ms(reps, [&] { checksum += laplacian_h(f)(0, 0); }));

    report("rusanov_convective_div",
           time_ms(reps, [&] { checksum += ref::rusanov_convective_divergence(state).d1(0, 0); }),
           time_ms(reps, [&] { checksum += rusanov_convective_divergence(state).d1(0, 0); }));

    RegimeParams params;
    StepConfig cfg;
    const double dt = compute_dt(state, cfg);
    const double step_ms = time_ms(std::max(1, reps / 4), [&] {
        checksum += step(state, dt, params, cfg).rho(0, 0);
    });
    std::printf("\nfull semi-implicit step: %.3f ms (dt=%.3g)\n", step_ms, dt);
    std::printf("checksum %.6g\n", checksum);
    return 0;
}
