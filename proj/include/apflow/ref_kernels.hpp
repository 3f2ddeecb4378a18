#pragma once

#include "apflow/fluxes.hpp"
#include "apflow/grid.hpp"

namespace apflow::ref {

// Plain serial implementations of the discrete operators, written
// independently of the ops kernels (modulo wrapping, direct stencils,
// per-face flux loops). They serve as oracles in the test suites and as the
// baseline in the benchmark.

VectorField central_gradient(const ScalarField& f);
ScalarField central_divergence(const VectorField& v);
/// Direct wide 5-point stencil: (f(c+2e_k) - 2f(c) + f(c-2e_k)) / (4 dx_k^2).
ScalarField laplacian(const ScalarField& f);
ScalarField d2(const ScalarField& f);

ConvectiveUpdate rusanov_convective_divergence(const ConservedField& state);
double max_convective_speed(const ConservedField& state);

}  // namespace apflow::ref
