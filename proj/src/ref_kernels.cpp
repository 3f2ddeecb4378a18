#include "apflow/ref_kernels.hpp"

#include <cmath>

namespace apflow::ref {

namespace {
int wrap(int k, int n) {
    int r = k % n;
    return r < 0 ? r + n : r;
}
}  // namespace

VectorField central_gradient(const ScalarField& f) {
    const GridSpec& g = f.grid();
    VectorField out(g);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            out.c1(i, j) = (f(wrap(i + 1, g.nx), j) - f(wrap(i - 1, g.nx), j)) / (2.0 * g.dx1);
            out.c2(i, j) = (f(i, wrap(j + 1, g.ny)) - f(i, wrap(j - 1, g.ny))) / (2.0 * g.dx2);
        }
    }
    return out;
}

ScalarField central_divergence(const VectorField& v) {
    const GridSpec& g = v.grid();
    ScalarField out(g);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            out(i, j) = (v.c1(wrap(i + 1, g.nx), j) - v.c1(wrap(i - 1, g.nx), j)) / (2.0 * g.dx1) +
                        (v.c2(i, wrap(j + 1, g.ny)) - v.c2(i, wrap(j - 1, g.ny))) / (2.0 * g.dx2);
        }
    }
    return out;
}

ScalarField laplacian(const ScalarField& f) {
    const GridSpec& g = f.grid();
    ScalarField out(g);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const double lx = (f(wrap(i + 2, g.nx), j) - 2.0 * f(i, j) + f(wrap(i - 2, g.nx), j)) /
                              (4.0 * g.dx1 * g.dx1);
            const double ly = (f(i, wrap(j + 2, g.ny)) - 2.0 * f(i, j) + f(i, wrap(j - 2, g.ny))) /
                              (4.0 * g.dx2 * g.dx2);
            out(i, j) = lx + ly;
        }
    }
    return out;
}

ScalarField d2(const ScalarField& f) {
    const GridSpec& g = f.grid();
    ScalarField out(g);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            out(i, j) = (f(i, wrap(j + 1, g.ny)) - f(i, wrap(j - 1, g.ny))) / (2.0 * g.dx2);
        }
    }
    return out;
}

namespace {
double face_flux(double un_l, double un_r, double qm_l, double qm_r) {
    const double s = std::max(std::abs(un_l), std::abs(un_r));
    return 0.5 * (un_l * qm_l + un_r * qm_r) - 0.5 * s * (qm_r - qm_l);
}
}  // namespace

ConvectiveUpdate rusanov_convective_divergence(const ConservedField& state) {
    require_positive(state.rho, "ref::rusanov_convective_divergence");
    const GridSpec& g = state.grid();
    ConvectiveUpdate out{ScalarField(g), ScalarField(g)};

    // x-faces: face f sits between L=(i,j) and R=(i+1,j)
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const int ir = wrap(i + 1, g.nx);
            const double ul = state.q1(i, j) / state.rho(i, j);
            const double ur = state.q1(ir, j) / state.rho(ir, j);
            const double f1 = face_flux(ul, ur, state.q1(i, j), state.q1(ir, j));
            const double f2 = face_flux(ul, ur, state.q2(i, j), state.q2(ir, j));
            out.d1(i, j) += f1 / g.dx1;
            out.d1(ir, j) -= f1 / g.dx1;
            out.d2(i, j) += f2 / g.dx1;
            out.d2(ir, j) -= f2 / g.dx1;
        }
    }
    // y-faces: face between L=(i,j) and R=(i,j+1)
    for (int j = 0; j < g.ny; ++j) {
        const int jr = wrap(j + 1, g.ny);
        for (int i = 0; i < g.nx; ++i) {
            const double vl = state.q2(i, j) / state.rho(i, j);
            const double vr = state.q2(i, jr) / state.rho(i, jr);
            const double f1 = face_flux(vl, vr, state.q1(i, j), state.q1(i, jr));
            const double f2 = face_flux(vl, vr, state.q2(i, j), state.q2(i, jr));
            out.d1(i, j) += f1 / g.dx2;
            out.d1(i, jr) -= f1 / g.dx2;
            out.d2(i, j) += f2 / g.dx2;
            out.d2(i, jr) -= f2 / g.dx2;
        }
    }
    return out;
}

double max_convective_speed(const ConservedField& state) {
    require_positive(state.rho, "ref::max_convective_speed");
    const GridSpec& g = state.grid();
    double m = 0.0;
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const double r = state.rho(i, j);
            m = std::max(m, std::abs(state.q1(i, j) / r) + std::abs(state.q2(i, j) / r));
        }
    }
    return m;
}

}  // namespace apflow::ref
