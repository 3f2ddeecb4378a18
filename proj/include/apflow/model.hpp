#pragma once

#include "apflow/grid.hpp"

namespace apflow {

/// Singular-limit parameters. Ma = eps; Fr = eps^(alpha/2), so alpha = 0 is the
/// low-Mach regime and alpha = 1 the Boussinesq regime.
struct RegimeParams {
    double eps = 0.1;
    int alpha = 0;
    double gamma_eos = 2.0;
    bool gravity_on = true;

    void validate() const;
    /// eps^alpha for alpha in {0,1}.
    double eps_alpha() const { return alpha == 0 ? 1.0 : eps; }
};

/// Conserved unknowns: density and momentum q = rho*u, all cell-centered.
struct ConservedField {
    ScalarField rho;
    ScalarField q1;
    ScalarField q2;

    ConservedField() = default;
    explicit ConservedField(const GridSpec& g) : rho(g, 1.0), q1(g), q2(g) {}
    ConservedField(ScalarField rho_, ScalarField q1_, ScalarField q2_);

    const GridSpec& grid() const { return rho.grid(); }
};

double pressure(double rho, double gamma_eos);             // P(rho) = rho^gamma
double pressure_derivative(double rho, double gamma_eos);  // gamma * rho^(gamma-1)

ScalarField pressure(const ScalarField& rho, double gamma_eos);
ScalarField pressure_derivative(const ScalarField& rho, double gamma_eos);

/// u = q / rho. Throws PositivityError if any density is nonpositive.
VectorField velocity(const ConservedField& state);

// Pointwise well-prepared initial data on the unit torus.
double init_density(double x1, double x2, double eps);
double init_momentum1(double x1, double x2, double eps);
double init_momentum2(double x1, double x2, double eps);

/// Well-prepared initial data evaluated at cell centers.
ConservedField well_prepared_init(const GridSpec& grid, double eps);

/// Throws PositivityError naming `where` if rho has a nonpositive entry.
void require_positive(const ScalarField& rho, const char* where);

}  // namespace apflow
