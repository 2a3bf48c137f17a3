#pragma once

#include <cstddef>
#include <optional>

#include "omitsim/spectrum.hpp"

namespace omitsim {

// Closed-form Fano channel: q asymmetry, gamma linewidth, plus the mechanical
// channel's beta and frequency offset (zero for the atomic channel).
struct FanoChannelParams {
    double q = 0.0;
    double gamma = 0.0;
    double beta = 0.0;          // omega_m (delta_c - delta_tilde)/2
    double omega_offset = 0.0;  // delta_c - omega_m
};

// Mechanical channel: gamma1 = kappa beta / (kappa^2 + Omega^2),
// q1 = -Omega/kappa, Omega = delta_c - omega_m. Throws ZeroCoupling when
// g_mc = 0 or the cavity is unpopulated.
FanoChannelParams mech_channel(const SystemParams& params,
                               const SteadyState& ss);

// Atomic channel: gamma2 = gamma_a g_ac^2 / (gamma_a^2 + delta_a^2),
// q2 = -delta_a/gamma_a. Throws ZeroCoupling when g_ac = 0.
FanoChannelParams atom_channel(const SystemParams& params);

// nu_p = [2/(1+q^2)] (x+q)^2/(1+x^2) with x = (delta - omega_m)/gamma - q.
// Exactly 0 at x = -q and exactly 2 at x = 1/q.
double fano_profile(const FanoChannelParams& channel, double delta,
                    double omega_m);

// Least-squares fit of  amplitude (x+q)^2 / ((1+q^2)(1+x^2)),
// x = (delta-center)/gamma - q, by damped Gauss-Newton with gamma > 0
// enforced, at most 200 iterations, convergence on relative step < 1e-10.
struct FanoFit {
    double q = 0.0;
    double gamma = 0.0;
    double center = 0.0;
    double amplitude = 0.0;
    double residual = 0.0;        // root-mean-square misfit
    bool converged = false;
    bool symmetric_limit = false; // |q| ran away: data is symmetric
};

// Fit over grid indices [first, last). Requires at least 8 points.
FanoFit fit_fano(const Spectrum& spectrum, std::size_t first, std::size_t last,
                 const std::optional<FanoFit>& init = std::nullopt);

}  // namespace omitsim
