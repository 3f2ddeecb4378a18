#include "apflow/ops.hpp"

#include <algorithm>
#include <cmath>

namespace apflow {

VectorField central_gradient(const ScalarField& f) {
    const GridSpec& g = f.grid();
    VectorField out(g);
    const double inv1 = 1.0 / (2.0 * g.dx1);
    const double inv2 = 1.0 / (2.0 * g.dx2);
    const double* fd = f.data();
    double* o1 = out.c1.data();
    double* o2 = out.c2.data();
    const int nx = g.nx, ny = g.ny;
#pragma omp parallel for
    for (int j = 0; j < ny; ++j) {
        const int jm = (j == 0) ? ny - 1 : j - 1;
        const int jp = (j + 1 == ny) ? 0 : j + 1;
        for (int i = 0; i < nx; ++i) {
            const int im = (i == 0) ? nx - 1 : i - 1;
            const int ip = (i + 1 == nx) ? 0 : i + 1;
            const int k = j * nx + i;
            o1[k] = (fd[j * nx + ip] - fd[j * nx + im]) * inv1;
            o2[k] = (fd[jp * nx + i] - fd[jm * nx + i]) * inv2;
        }
    }
    return out;
}

ScalarField central_divergence(const VectorField& v) {
    const GridSpec& g = v.grid();
    ScalarField out(g);
    const double inv1 = 1.0 / (2.0 * g.dx1);
    const double inv2 = 1.0 / (2.0 * g.dx2);
    const double* v1 = v.c1.data();
    const double* v2 = v.c2.data();
    double* o = out.data();
    const int nx = g.nx, ny = g.ny;
#pragma omp parallel for
    for (int j = 0; j < ny; ++j) {
        const int jm = (j == 0) ? ny - 1 : j - 1;
        const int jp = (j + 1 == ny) ? 0 : j + 1;
        for (int i = 0; i < nx; ++i) {
            const int im = (i == 0) ? nx - 1 : i - 1;
            const int ip = (i + 1 == nx) ? 0 : i + 1;
            o[j * nx + i] = (v1[j * nx + ip] - v1[j * nx + im]) * inv1 +
                            (v2[jp * nx + i] - v2[jm * nx + i]) * inv2;
        }
    }
    return out;
}

ScalarField laplacian_h(const ScalarField& f) {
    return central_divergence(central_gradient(f));
}

ScalarField d2_h(const ScalarField& f) {
    const GridSpec& g = f.grid();
    ScalarField out(g);
    const double inv2 = 1.0 / (2.0 * g.dx2);
    const double* fd = f.data();
    double* o = out.data();
    const int nx = g.nx, ny = g.ny;
#pragma omp parallel for
    for (int j = 0; j < ny; ++j) {
        const int jm = (j == 0) ? ny - 1 : j - 1;
        const int jp = (j + 1 == ny) ? 0 : j + 1;
        for (int i = 0; i < nx; ++i) {
            o[j * nx + i] = (fd[jp * nx + i] - fd[jm * nx + i]) * inv2;
        }
    }
    return out;
}

double max_abs(const ScalarField& f) {
    double m = 0.0;
    const double* d = f.data();
    const int n = f.size();
    for (int k = 0; k < n; ++k) m = std::max(m, std::abs(d[k]));
    return m;
}

double field_sum(const ScalarField& f) {
    double s = 0.0;
    const double* d = f.data();
    const int n = f.size();
    for (int k = 0; k < n; ++k) s += d[k];
    return s;
}

double min_value(const ScalarField& f) {
    const double* d = f.data();
    const int n = f.size();
    double m = d[0];
    for (int k = 1; k < n; ++k) m = std::min(m, d[k]);
    return m;
}

double max_abs_diff(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a.grid(), b.grid(), "max_abs_diff");
    double m = 0.0;
    const double* da = a.data();
    const double* db = b.data();
    const int n = a.size();
    for (int k = 0; k < n; ++k) m = std::max(m, std::abs(da[k] - db[k]));
    return m;
}

}  // namespace apflow
