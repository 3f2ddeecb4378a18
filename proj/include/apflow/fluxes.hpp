#pragma once

#include "apflow/model.hpp"

namespace apflow {

/// Discrete divergence of the convective momentum flux tensor, one component
/// per momentum equation. Zero for spatially uniform states.
struct ConvectiveUpdate {
    ScalarField d1;
    ScalarField d2;
};

/// Rusanov (local Lax-Friedrichs) finite-volume discretisation of
/// div(q (x) q / rho). First order: face states are the adjacent cell values,
/// the diffused variables are the conserved momentum components, and the
/// signal speed is max(|u_n,L|, |u_n,R|) -- purely advective, the acoustic
/// speed is handled implicitly elsewhere.
ConvectiveUpdate rusanov_convective_divergence(const ConservedField& state);

/// max over cells of |u1| + |u2|; the explicit subsystem's fastest signal.
double max_convective_speed(const ConservedField& state);

}  // namespace apflow
