#include "apflow/model.hpp"

#include <cmath>
#include <string>

#include "apflow/errors.hpp"

namespace apflow {

void RegimeParams::validate() const {
    if (!(eps > 0.0)) throw std::invalid_argument("RegimeParams: eps must be > 0");
    if (alpha != 0 && alpha != 1) throw std::invalid_argument("RegimeParams: alpha must be 0 or 1");
    if (!(gamma_eos > 1.0)) throw std::invalid_argument("RegimeParams: gamma_eos must be > 1");
}

ConservedField::ConservedField(ScalarField rho_, ScalarField q1_, ScalarField q2_)
    : rho(std::move(rho_)), q1(std::move(q1_)), q2(std::move(q2_)) {
    require_same_grid(rho.grid(), q1.grid(), "ConservedField");
    require_same_grid(rho.grid(), q2.grid(), "ConservedField");
}

void require_positive(const ScalarField& rho, const char* where) {
    const double* d = rho.data();
    const int n = rho.size();
    for (int k = 0; k < n; ++k) {
        if (!(d[k] > 0.0)) {
            throw PositivityError(std::string(where) + ": nonpositive density " +
                                  std::to_string(d[k]) + " at cell " + std::to_string(k));
        }
    }
}

double pressure(double rho, double gamma_eos) {
    if (!(rho > 0.0)) {
        throw PositivityError("pressure: nonpositive density " + std::to_string(rho));
    }
    return std::pow(rho, gamma_eos);
}

double pressure_derivative(double rho, double gamma_eos) {
    if (!(rho > 0.0)) {
        throw PositivityError("pressure_derivative: nonpositive density " + std::to_string(rho));
    }
    return gamma_eos * std::pow(rho, gamma_eos - 1.0);
}

ScalarField pressure(const ScalarField& rho, double gamma_eos) {
    require_positive(rho, "pressure");
    ScalarField out(rho.grid());
    const double* r = rho.data();
    double* o = out.data();
    const int n = rho.size();
#pragma omp parallel for
    for (int k = 0; k < n; ++k) o[k] = std::pow(r[k], gamma_eos);
    return out;
}

ScalarField pressure_derivative(const ScalarField& rho, double gamma_eos) {
    require_positive(rho, "pressure_derivative");
    ScalarField out(rho.grid());
    const double* r = rho.data();
    double* o = out.data();
    const int n = rho.size();
#pragma omp parallel for
    for (int k = 0; k < n; ++k) o[k] = gamma_eos * std::pow(r[k], gamma_eos - 1.0);
    return out;
}

VectorField velocity(const ConservedField& state) {
    require_positive(state.rho, "velocity");
    VectorField out(state.grid());
    const double* r = state.rho.data();
    const double* q1 = state.q1.data();
    const double* q2 = state.q2.data();
    double* u1 = out.c1.data();
    double* u2 = out.c2.data();
    const int n = state.rho.size();
#pragma omp parallel for
    for (int k = 0; k < n; ++k) {
        u1[k] = q1[k] / r[k];
        u2[k] = q2[k] / r[k];
    }
    return out;
}

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double init_density(double x1, double x2, double eps) {
    const double s = std::sin(kTwoPi * (x1 + x2));
    return 1.0 + eps * eps * s * s;
}

double init_momentum1(double x1, double x2, double eps) {
    return std::sin(kTwoPi * (x1 - x2)) + eps * eps * std::sin(kTwoPi * (x1 + x2));
}

double init_momentum2(double x1, double x2, double eps) {
    return std::sin(kTwoPi * (x1 - x2)) + eps * eps * std::cos(kTwoPi * (x1 + x2));
}

ConservedField well_prepared_init(const GridSpec& grid, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("well_prepared_init: eps must be > 0");
    ConservedField state(grid);
    state.rho = evaluate_at_centers(grid, [eps](double x1, double x2) { return init_density(x1, x2, eps); });
    state.q1 = evaluate_at_centers(grid, [eps](double x1, double x2) { return init_momentum1(x1, x2, eps); });
    state.q2 = evaluate_at_centers(grid, [eps](double x1, double x2) { return init_momentum2(x1, x2, eps); });
    return state;
}

}  // namespace apflow
