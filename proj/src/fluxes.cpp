#include "apflow/fluxes.hpp"

#include <cmath>

namespace apflow {

namespace {

// Rusanov flux across one face for momentum component qm, with normal
// velocity un on either side:
//   F = 1/2 (un_L qm_L + un_R qm_R) - 1/2 s (qm_R - qm_L),  s = max(|un_L|,|un_R|).
// Computed identically from both adjacent cells, so face fluxes telescope
// exactly over the periodic domain.
inline double rusanov_face(double un_l, double un_r, double qm_l, double qm_r) {
    const double s = std::max(std::abs(un_l), std::abs(un_r));
    return 0.5 * (un_l * qm_l + un_r * qm_r) - 0.5 * s * (qm_r - qm_l);
}

}  // namespace

ConvectiveUpdate rusanov_convective_divergence(const ConservedField& state) {
    require_positive(state.rho, "rusanov_convective_divergence");
    const GridSpec& g = state.grid();
    ConvectiveUpdate out{ScalarField(g), ScalarField(g)};

    const double* rho = state.rho.data();
    const double* q1 = state.q1.data();
    const double* q2 = state.q2.data();
    double* d1 = out.d1.data();
    double* d2 = out.d2.data();
    const int nx = g.nx, ny = g.ny;
    const double inv1 = 1.0 / g.dx1;
    const double inv2 = 1.0 / g.dx2;

#pragma omp parallel for
    for (int j = 0; j < ny; ++j) {
        const int jm = (j == 0) ? ny - 1 : j - 1;
        const int jp = (j + 1 == ny) ? 0 : j + 1;
        for (int i = 0; i < nx; ++i) {
            const int im = (i == 0) ? nx - 1 : i - 1;
            const int ip = (i + 1 == nx) ? 0 : i + 1;
            const int c = j * nx + i;
            const int cw = j * nx + im, ce = j * nx + ip;
            const int cs = jm * nx + i, cn = jp * nx + i;

            const double uc = q1[c] / rho[c], vc = q2[c] / rho[c];
            const double uw = q1[cw] / rho[cw];
            const double ue = q1[ce] / rho[ce];
            const double vs = q2[cs] / rho[cs];
            const double vn = q2[cn] / rho[cn];

            // x-direction faces (i-1/2) and (i+1/2)
            const double f1w = rusanov_face(uw, uc, q1[cw], q1[c]);
            const double f1e = rusanov_face(uc, ue, q1[c], q1[ce]);
            const double f2w = rusanov_face(uw, uc, q2[cw], q2[c]);
            const double f2e = rusanov_face(uc, ue, q2[c], q2[ce]);

            // y-direction faces (j-1/2) and (j+1/2)
            const double g1s = rusanov_face(vs, vc, q1[cs], q1[c]);
            const double g1n = rusanov_face(vc, vn, q1[c], q1[cn]);
            const double g2s = rusanov_face(vs, vc, q2[cs], q2[c]);
            const double g2n = rusanov_face(vc, vn, q2[c], q2[cn]);

            d1[c] = (f1e - f1w) * inv1 + (g1n - g1s) * inv2;
            d2[c] = (f2e - f2w) * inv1 + (g2n - g2s) * inv2;
        }
    }
    return out;
}

double max_convective_speed(const ConservedField& state) {
    require_positive(state.rho, "max_convective_speed");
    const double* rho = state.rho.data();
    const double* q1 = state.q1.data();
    const double* q2 = state.q2.data();
    const int n = state.rho.size();
    double m = 0.0;
    for (int k = 0; k < n; ++k) {
        m = std::max(m, std::abs(q1[k] / rho[k]) + std::abs(q2[k] / rho[k]));
    }
    return m;
}

}  // namespace apflow
