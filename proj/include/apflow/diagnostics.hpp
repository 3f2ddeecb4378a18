#pragma once

#include "apflow/model.hpp"

namespace apflow {

/// Asymptotic-consistency observables of a state. The divergence norms use the
/// scheme's own central stencil, since that is the discrete divergence the
/// limit-consistency statement is about.
struct ApObservables {
    double t = 0.0;
    double mass = 0.0;         // sum of rho * cell_area
    double rho_dev_inf = 0.0;  // max |rho - mean(rho)|
    double div_inf = 0.0;      // max |central_divergence(u)|
    double div_l2 = 0.0;       // sqrt(sum div^2 * cell_area)
    double umax = 0.0;         // max speed sqrt(u1^2 + u2^2)
};

ApObservables observe(const ConservedField& state, double t);

/// First-order density closure of the Boussinesq limit: 1 - x2/gamma at cell
/// centers (the vertical axis is the second coordinate in 2D).
ScalarField boussinesq_rho1(const GridSpec& grid, double gamma_eos);

/// Cell-area-weighted sum of central_divergence(u): the discrete boundary flux
/// integral. Telescopes to zero on periodic grids, which is the mechanism that
/// pins the leading-order density to a constant.
double boundary_compression_integral(const ConservedField& state);

}  // namespace apflow
