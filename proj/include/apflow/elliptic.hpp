#pragma once

#include <utility>

#include "apflow/fluxes.hpp"
#include "apflow/model.hpp"

namespace apflow {

/// The nonlinear problem for the new density, obtained by eliminating the new
/// momentum between the implicit mass update and the semi-implicit momentum
/// update:
///
///   rho - (dt^2/eps^2) * laplacian_h(P(rho)) - (dt^2/eps^alpha) * d2_h(rho) = b
///
/// (gravity term present only when gravity_on). The sign of the d2_h term
/// follows from the elimination with momentum source -(rho/eps^alpha) e2.
struct EllipticProblem {
    ScalarField rhs;  // b = rho^n - Phi_h
    double dt = 0.0;
    RegimeParams params{};
    GridSpec grid{};
};

struct SolveStats {
    int newton_iters = 0;
    double final_residual = 0.0;
    long linear_iters_total = 0;
    std::vector<double> residual_history;  // max-norm residual per Newton iterate
};

/// b = rho^n - dt * central_divergence(q^n - dt * conv). Applying the same
/// discrete operators that define the scheme makes the elimination exact, so
/// the solved density satisfies the discrete mass update to solver tolerance.
ScalarField assemble_rhs(const ConservedField& state_n, const ConvectiveUpdate& conv, double dt);

ScalarField elliptic_residual(const ScalarField& rho_c, const EllipticProblem& prob);

/// Newton's method with positivity damping; each step solves the linearised
/// system with matrix-free BiCGStab to relative residual 0.01*tol.
/// Throws NonConvergenceError (budget exhausted) or PositivityError (damping
/// cannot keep the iterate positive; the time step is too large).
std::pair<ScalarField, SolveStats> solve_elliptic(const EllipticProblem& prob,
                                                  const ScalarField& guess,
                                                  double tol = 1e-10,
                                                  int max_newton = 50);

}  // namespace apflow
