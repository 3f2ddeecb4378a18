#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace apflow {

/// Linearisation state of the wave-equation system used for the L2 analysis.
struct LinearizationState {
    double rho_bar = 1.0;
    std::array<double, 2> u_bar{0.0, 0.0};
    double a_bar = 1.0;  // linearised sound speed
    double eps = 1.0;

    void validate() const;
    double lambda() const { return a_bar * a_bar / (rho_bar * eps * eps); }
};

using Mat3c = std::array<std::array<std::complex<double>, 3>, 3>;

/// Fourier one-step update matrix of the semi-implicit scheme applied to the
/// linear wave system:
///   G = gamma_pref * N(dt,xi),  gamma_pref = (1 - i dt (ubar.xi)) / D,
///   D = 1 + dt^2 rho_bar lambda |xi|^2,  lambda = abar^2 / (rho_bar eps^2).
/// Entries are divided by the shared denominator so that G(0,xi) and the
/// untouched shear mode come out exactly.
Mat3c amplification_matrix(double dt, const std::array<double, 2>& xi,
                           const LinearizationState& lin);

/// Largest eigenvalue modulus, via a shifted complex QR iteration (exact for
/// already-triangular input, robust for multiple eigenvalues).
double spectral_radius(const Mat3c& m);

/// Largest singular value, from the closed-form eigenvalues of the 3x3
/// Hermitian Gram matrix.
double spectral_norm(const Mat3c& m);

struct StabilityRow {
    double xi1 = 0.0;
    double xi2 = 0.0;
    double dt = 0.0;
    double spectral_radius = 0.0;
    double norm = 0.0;
    double lipschitz_ratio = 0.0;  // ||G(dt,xi) - I|| / dt
};

/// Numerical record of the three Richtmyer conditions over the frequency
/// lattice {2 pi k : k in [-N,N]^2} and a decreasing dt ladder.
struct StabilityReport {
    LinearizationState lin{};
    int lattice_radius = 0;
    std::vector<double> dt_ladder;
    std::vector<StabilityRow> rows;  // one per (xi, dt), lattice-major

    double max_entry_g0 = 0.0;       // condition (i) datum: max |G(0,xi)_jk|
    double max_norm_g0 = 0.0;        // condition (ii) datum: max ||G(0,xi)||
    double lipschitz_constant = 0.0; // max ratio over lattice x ladder
    double worst_ratio_growth = 0.0; // max of ratio(dt_{k+1}) / ratio(dt_k)

    bool cond_bounded_entries = false;  // (i)  entries of G(0,xi) bounded
    bool cond_norm_le_one = false;      // (ii) ||G(0,xi)|| <= 1 + 1e-12
    bool cond_lipschitz = false;        // (iii) ratio(dt/2) <= 1.1*ratio(dt) + 1e-12
};

StabilityReport stability_report(const LinearizationState& lin, int lattice_radius,
                                 const std::vector<double>& dt_ladder);

void write_stability_csv(const StabilityReport& report, const std::string& path);
std::string format_stability_table(const StabilityReport& report);

}  // namespace apflow
