#include "apflow/elliptic.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "apflow/errors.hpp"
#include "apflow/ops.hpp"

namespace apflow {

ScalarField assemble_rhs(const ConservedField& state_n, const ConvectiveUpdate& conv, double dt) {
    const GridSpec& g = state_n.grid();
    require_same_grid(g, conv.d1.grid(), "assemble_rhs");

    VectorField q_star(g);
    const double* q1 = state_n.q1.data();
    const double* q2 = state_n.q2.data();
    const double* c1 = conv.d1.data();
    const double* c2 = conv.d2.data();
    double* s1 = q_star.c1.data();
    double* s2 = q_star.c2.data();
    const int n = g.ncells();
#pragma omp parallel for
    for (int k = 0; k < n; ++k) {
        s1[k] = q1[k] - dt * c1[k];
        s2[k] = q2[k] - dt * c2[k];
    }

    ScalarField div = central_divergence(q_star);
    ScalarField b(g);
    const double* rho = state_n.rho.data();
    const double* dv = div.data();
    double* bd = b.data();
#pragma omp parallel for
    for (int k = 0; k < n; ++k) bd[k] = rho[k] - dt * dv[k];
    return b;
}

ScalarField elliptic_residual(const ScalarField& rho_c, const EllipticProblem& prob) {
    require_same_grid(rho_c.grid(), prob.rhs.grid(), "elliptic_residual");
    require_positive(rho_c, "elliptic_residual");
    prob.params.validate();

    const double eps = prob.params.eps;
    const double cp = prob.dt * prob.dt / (eps * eps);
    const double cg = prob.params.gravity_on ? prob.dt * prob.dt / prob.params.eps_alpha() : 0.0;

    ScalarField lap = laplacian_h(pressure(rho_c, prob.params.gamma_eos));

    ScalarField out(rho_c.grid());
    const double* r = rho_c.data();
    const double* lp = lap.data();
    const double* b = prob.rhs.data();
    double* o = out.data();
    const int n = rho_c.size();

    if (prob.params.gravity_on) {
        ScalarField dz = d2_h(rho_c);
        const double* dzd = dz.data();
#pragma omp parallel for
        for (int k = 0; k < n; ++k) o[k] = r[k] - cp * lp[k] - cg * dzd[k] - b[k];
    } else {
#pragma omp parallel for
        for (int k = 0; k < n; ++k) o[k] = r[k] - cp * lp[k] - b[k];
    }
    return out;
}

namespace {

// Matrix-free Newton Jacobian:  v  ->  v - cp * L_h(P'(rho) v) - cg * d2_h(v).
// The Laplacian uses the same composition arithmetic as laplacian_h, fused into
// one stencil pass over the premultiplied buffer.
struct JacobianOp {
    const GridSpec* g = nullptr;
    double cp = 0.0;
    double cg = 0.0;
    const std::vector<double>* pprime = nullptr;
    mutable std::vector<double> w;

    void apply(const std::vector<double>& v, std::vector<double>& out) const {
        const int nx = g->nx, ny = g->ny;
        const int n = nx * ny;
        const double inv1 = 1.0 / (2.0 * g->dx1);
        const double inv2 = 1.0 / (2.0 * g->dx2);
        const double* pp = pprime->data();
        double* wd = w.data();
        const double* vd = v.data();
        double* od = out.data();

#pragma omp parallel for
        for (int k = 0; k < n; ++k) wd[k] = pp[k] * vd[k];

        const double cp_ = cp, cg_ = cg;
#pragma omp parallel for
        for (int j = 0; j < ny; ++j) {
            const int jm = (j == 0) ? ny - 1 : j - 1;
            const int jp = (j + 1 == ny) ? 0 : j + 1;
            const int jm2 = (j < 2) ? j - 2 + ny : j - 2;
            const int jp2 = (j + 2 >= ny) ? j + 2 - ny : j + 2;
            for (int i = 0; i < nx; ++i) {
                const int im2 = (i < 2) ? i - 2 + nx : i - 2;
                const int ip2 = (i + 2 >= nx) ? i + 2 - nx : i + 2;
                const int k = j * nx + i;
                const double g1p = (wd[j * nx + ip2] - wd[k]) * inv1;
                const double g1m = (wd[k] - wd[j * nx + im2]) * inv1;
                const double g2p = (wd[jp2 * nx + i] - wd[k]) * inv2;
                const double g2m = (wd[k] - wd[jm2 * nx + i]) * inv2;
                const double lap = (g1p - g1m) * inv1 + (g2p - g2m) * inv2;
                const double dz = (vd[jp * nx + i] - vd[jm * nx + i]) * inv2;
                od[k] = vd[k] - cp_ * lap - cg_ * dz;
            }
        }
    }
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

// Unpreconditioned BiCGStab. Dot products stay serial so the result is
// independent of thread count; the operator applications parallelise.
// Returns the relative recursive residual reached; x holds the best iterate.
double bicgstab(const JacobianOp& A, const std::vector<double>& rhs, std::vector<double>& x,
                double rtol, long max_iters, long& iters_used) {
    const std::size_t n = rhs.size();
    std::vector<double> r = rhs;  // x starts at zero
    std::vector<double> r0 = r;
    std::vector<double> p = r;
    std::vector<double> v(n, 0.0), s(n, 0.0), t(n, 0.0);
    std::vector<double> x_best(n, 0.0);

    const double bnorm = norm2(rhs);
    iters_used = 0;
    if (bnorm == 0.0) {
        std::fill(x.begin(), x.end(), 0.0);
        return 0.0;
    }

    double rnorm = bnorm;
    double best = rnorm;
    double progress_marker = rnorm;
    long progress_iter = 0;
    double rho = dot(r0, r);
    const double tiny = 1e-300;

    for (long it = 1; it <= max_iters; ++it) {
        iters_used = it;
        A.apply(p, v);
        const double r0v = dot(r0, v);
        if (std::abs(r0v) < tiny) break;
        const double alpha = rho / r0v;
        for (std::size_t k = 0; k < n; ++k) s[k] = r[k] - alpha * v[k];
        const double snorm = norm2(s);
        if (snorm <= rtol * bnorm) {
            for (std::size_t k = 0; k < n; ++k) x[k] += alpha * p[k];
            return snorm / bnorm;
        }
        A.apply(s, t);
        const double tt = dot(t, t);
        if (tt < tiny) break;
        const double omega = dot(t, s) / tt;
        for (std::size_t k = 0; k < n; ++k) {
            x[k] += alpha * p[k] + omega * s[k];
            r[k] = s[k] - omega * t[k];
        }
        rnorm = norm2(r);
        if (rnorm < best) {
            best = rnorm;
            x_best = x;
        }
        if (rnorm <= rtol * bnorm) return rnorm / bnorm;
        // stagnation: no 1% gain within 400 iterations
        if (rnorm < 0.99 * progress_marker) {
            progress_marker = rnorm;
            progress_iter = it;
        }
        if (it - progress_iter > 400) break;
        const double rho_new = dot(r0, r);
        if (std::abs(rho_new) < tiny * bnorm * bnorm || std::abs(omega) < tiny) {
            // restart with the current residual as the shadow vector
            r0 = r;
            p = r;
            rho = dot(r0, r);
            continue;
        }
        const double beta = (rho_new / rho) * (alpha / omega);
        for (std::size_t k = 0; k < n; ++k) p[k] = r[k] + beta * (p[k] - omega * v[k]);
        rho = rho_new;
    }
    if (best < rnorm) x = x_best;
    return best / bnorm;
}

}  // namespace

std::pair<ScalarField, SolveStats> solve_elliptic(const EllipticProblem& prob,
                                                  const ScalarField& guess, double tol,
                                                  int max_newton) {
    if (!(tol > 0.0)) throw std::invalid_argument("solve_elliptic: tol must be > 0");
    if (max_newton < 0) throw std::invalid_argument("solve_elliptic: max_newton must be >= 0");
    prob.params.validate();
    require_positive(guess, "solve_elliptic (initial guess)");
    require_same_grid(guess.grid(), prob.rhs.grid(), "solve_elliptic");

    const GridSpec& g = guess.grid();
    const int n = g.ncells();
    const double eps = prob.params.eps;
    const double cp = prob.dt * prob.dt / (eps * eps);
    const double cg = prob.params.gravity_on ? prob.dt * prob.dt / prob.params.eps_alpha() : 0.0;
    const double target = tol * (1.0 + max_abs(prob.rhs));
    const long max_lin_iters = 500 + 50L * (g.nx + g.ny);

    ScalarField rho = guess;
    SolveStats stats;

    std::vector<double> delta(static_cast<std::size_t>(n), 0.0);
    std::vector<double> rhs_lin(static_cast<std::size_t>(n), 0.0);

    for (int it = 0;; ++it) {
        ScalarField res = elliptic_residual(rho, prob);
        const double rnorm = max_abs(res);
        stats.residual_history.push_back(rnorm);
        if (rnorm <= target) {
            stats.newton_iters = it;
            stats.final_residual = rnorm;
            return {std::move(rho), stats};
        }
        if (it >= max_newton) {
            throw NonConvergenceError("solve_elliptic: Newton did not reach tolerance " +
                                          std::to_string(target) + " in " +
                                          std::to_string(max_newton) +
                                          " iterations (residual " + std::to_string(rnorm) + ")",
                                      it, rnorm);
        }

        ScalarField pprime = pressure_derivative(rho, prob.params.gamma_eos);
        JacobianOp jac;
        jac.g = &g;
        jac.cp = cp;
        jac.cg = cg;
        jac.pprime = &pprime.values();
        jac.w.assign(static_cast<std::size_t>(n), 0.0);

        const double* rd = res.data();
        for (int k = 0; k < n; ++k) rhs_lin[k] = -rd[k];
        std::fill(delta.begin(), delta.end(), 0.0);
        long iters = 0;
        bicgstab(jac, rhs_lin, delta, 0.01 * tol, max_lin_iters, iters);
        stats.linear_iters_total += iters;

        // halve the update until the iterate stays positive
        double* rhod = rho.data();
        double scale = 1.0;
        int halvings = 0;
        for (;;) {
            double mn = rhod[0] + scale * delta[0];
            for (int k = 1; k < n; ++k) mn = std::min(mn, rhod[k] + scale * delta[k]);
            if (mn > 0.0) break;
            scale *= 0.5;
            if (++halvings > 30) {
                throw PositivityError(
                    "solve_elliptic: damping exhausted, cannot keep density positive "
                    "(time step too large)");
            }
        }
        for (int k = 0; k < n; ++k) rhod[k] += scale * delta[k];
    }
}

}  // namespace apflow
