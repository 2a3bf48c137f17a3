#pragma once

#include <cstddef>
#include <vector>

#include "omitsim/steady_state.hpp"

namespace omitsim {
namespace oracle {

// Mean-field trajectory from vacuum initial conditions, sampled every
// store_stride-th integrator step. <q> and <p> are real by construction.
struct Trajectory {
    double dt = 0.0;      // integrator step
    int stride = 1;       // storage stride; sample spacing is dt*stride
    std::vector<double> t;
    std::vector<double> q;
    std::vector<double> p;
    std::vector<Complex> c;
    std::vector<Complex> sm;  // <sigma_->

    double sample_spacing() const { return dt * stride; }
};

// Fixed-step 4th-order Runge-Kutta on the 6-real-dimension mean-field system
// with drive Omega_l + eps_p e^{-i delta t}. Requires
// dt <= (2 pi / max(omega_m, |delta|, |delta_c|, |delta_a|)) / 50. Throws
// Divergence when any state magnitude exceeds 1e12 (with the blow-up time).
Trajectory integrate(const SystemParams& params, const DriveParams& drive,
                     double delta, double t_final, double dt,
                     int store_stride = 1);

// Fourier coefficients of one observable over the final window:
// dc, the e^{-i delta t} coefficient (minus) and the e^{+i delta t}
// coefficient (plus). The window spans an integer number of probe periods.
struct HarmonicDecomposition {
    Complex dc{}, minus{}, plus{};
    double t_start = 0.0;
    double t_end = 0.0;
};

struct HarmonicSet {
    HarmonicDecomposition c;
    HarmonicDecomposition q;  // plus = conj(minus) by realness
    HarmonicDecomposition sigma_minus;
};

// Project the trajectory tail onto {1, e^{-i delta t}, e^{+i delta t}} over
// the last n_periods probe periods. The sampling must align with the period
// (use aligned_dt); the dc component of the two preceding windows must agree
// to 1e-6 relative or NotSettled is thrown.
HarmonicSet project_harmonics(const Trajectory& traj, double delta,
                              int n_periods);

// Coefficient of e^{-i omega t} over the last n_samples stored samples
// (exact for tones commensurate with the window).
Complex project_tone(const Trajectory& traj, const std::vector<Complex>& series,
                     double omega, std::size_t n_samples);

// Largest dt <= dt_max that divides the probe period exactly.
double aligned_dt(double delta, double dt_max);

// Period-aligned dt resolving the fastest system frequency with `divisor`
// steps per period (the integrate() contract requires divisor >= 50).
double default_dt(const SystemParams& params, double delta, int divisor = 100);

// Settle-time estimate: `folds` e-foldings of the slowest drift mode.
double settle_time(const SystemParams& params, const SteadyState& ss,
                   double folds = 12.0);

}  // namespace oracle
}  // namespace omitsim
