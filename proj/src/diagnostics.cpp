#include "apflow/diagnostics.hpp"

#include <cmath>

#include "apflow/ops.hpp"

namespace apflow {

ApObservables observe(const ConservedField& state, double t) {
    const GridSpec& g = state.grid();
    ApObservables obs;
    obs.t = t;

    const double area = g.cell_area();
    obs.mass = field_sum(state.rho) * area;

    const double mean = field_sum(state.rho) / g.ncells();
    const double* rho = state.rho.data();
    double dev = 0.0;
    for (int k = 0; k < g.ncells(); ++k) dev = std::max(dev, std::abs(rho[k] - mean));
    obs.rho_dev_inf = dev;

    const VectorField u = velocity(state);
    const ScalarField div = central_divergence(u);
    obs.div_inf = max_abs(div);
    const double* dv = div.data();
    double l2 = 0.0;
    for (int k = 0; k < g.ncells(); ++k) l2 += dv[k] * dv[k];
    obs.div_l2 = std::sqrt(l2 * area);

    const double* u1 = u.c1.data();
    const double* u2 = u.c2.data();
    double um = 0.0;
    for (int k = 0; k < g.ncells(); ++k) {
        um = std::max(um, std::sqrt(u1[k] * u1[k] + u2[k] * u2[k]));
    }
    obs.umax = um;
    return obs;
}

ScalarField boussinesq_rho1(const GridSpec& grid, double gamma_eos) {
    if (!(gamma_eos > 1.0)) throw std::invalid_argument("boussinesq_rho1: gamma_eos must be > 1");
    return evaluate_at_centers(grid, [gamma_eos](double, double x2) { return 1.0 - x2 / gamma_eos; });
}

double boundary_compression_integral(const ConservedField& state) {
    const ScalarField div = central_divergence(velocity(state));
    return field_sum(div) * state.grid().cell_area();
}

}  // namespace apflow
