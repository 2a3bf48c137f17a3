#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "omitsim/params.hpp"

namespace omitsim {

// Pump-only operating point.
struct SteadyState {
    Complex c_s{0.0, 0.0};          // intracavity field amplitude
    double n = 0.0;                 // photon number |c_s|^2
    double q_s = 0.0;               // mirror displacement (zero-point units)
    Complex a_s{0.0, 0.0};          // atomic coherence <sigma_->
    double delta_tilde = 0.0;       // delta_c - chi*n
    std::vector<double> all_roots;  // real photon-number roots, ascending
    std::size_t branch = 0;         // index of the selected root
    bool stable = false;            // strict Re(lambda) < 0 for all drift modes
    double max_re_eigenvalue = 0.0; // slowest-decaying / fastest-growing mode
};

enum class BranchPolicy { Lowest, Highest, Index };

// All real non-negative roots of the photon-number self-consistency cubic
//   n * |kappa_eff + i (delta_eff - chi n)|^2 = Omega_l^2,
// ascending. Omega_l = 0 yields the single root 0. Throws NonPhysical when
// kappa_eff <= 0 (inverted atom overwhelms the cavity loss).
std::vector<double> photon_number_roots(const SystemParams& params,
                                        const DriveParams& drive);

// Drift matrix of the mean-field fluctuations around the operating point,
// in the basis (dq, dp, dc, dc*, da, da*).
Eigen::Matrix<Complex, 6, 6> drift_matrix(const SystemParams& params,
                                          const Complex& c_s,
                                          double delta_tilde);

// Largest real part over the drift eigenvalues. With g_ac = 0 the decoupled
// atomic block is excluded (it never gets excited).
double max_drift_re(const SystemParams& params, const Complex& c_s,
                    double delta_tilde);

// Smallest |Re(lambda)| over the drift eigenvalues, i.e. the inverse of the
// slowest settling time. Excludes the decoupled atom when g_ac = 0.
double min_drift_decay(const SystemParams& params, const Complex& c_s,
                       double delta_tilde);

// Operating point on the selected branch. "Lowest"/"Highest" prefer the
// lowest/highest dynamically stable root and fall back to the lowest/highest
// root when none is stable (the result then carries stable = false; callers
// treat instability as warning-grade). Index selects all_roots[index] and
// throws BranchOutOfRange past the root count.
SteadyState steady_state(const SystemParams& params, const DriveParams& drive,
                         BranchPolicy policy = BranchPolicy::Lowest,
                         std::size_t index = 0);

// Relative residual of Eq.-(8) self-consistency: re-evaluating the field from
// the state's own delta_tilde must reproduce c_s.
double self_consistency_residual(const SystemParams& params,
                                 const DriveParams& drive,
                                 const SteadyState& ss);

}  // namespace omitsim
