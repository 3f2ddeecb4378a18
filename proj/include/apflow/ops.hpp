#pragma once

#include "apflow/grid.hpp"

namespace apflow {

// Central-difference stencil operators on periodic grids. All of them are pure
// per-cell maps; the loops are OpenMP-parallel and bitwise deterministic
// regardless of thread count (every output cell is written exactly once by a
// thread-independent expression).

/// Component k at cell c: (f(c+e_k) - f(c-e_k)) / (2 dx_k).
VectorField central_gradient(const ScalarField& f);

/// Sum over k of (v_k(c+e_k) - v_k(c-e_k)) / (2 dx_k).
ScalarField central_divergence(const VectorField& v);

/// Defined as central_divergence(central_gradient(f)): the wide (2h) Laplacian.
/// Kept as the literal composition so eliminating the momentum update inside the
/// implicit mass update stays exact to the bit.
ScalarField laplacian_h(const ScalarField& f);

/// Central difference along the second axis.
ScalarField d2_h(const ScalarField& f);

// Serial reductions; kept single-threaded so results never depend on thread count.
double max_abs(const ScalarField& f);
double field_sum(const ScalarField& f);
double min_value(const ScalarField& f);
double max_abs_diff(const ScalarField& a, const ScalarField& b);

}  // namespace apflow
