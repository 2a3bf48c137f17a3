#pragma once

#include <cmath>
#include <complex>

#include "omitsim/errors.hpp"

namespace omitsim {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Figure parameters are quoted in cyclic MHz; internally everything is an
// angular rate in rad/s.
inline constexpr double mhz_to_rads(double f_mhz) { return 2.0 * kPi * 1e6 * f_mhz; }
inline constexpr double rads_to_mhz(double w) { return w / (2.0 * kPi * 1e6); }

// Static rates and detunings of the cavity / mirror / atom system.
//
// Normalization: hbar = 1 and the mirror displacement q is measured in
// zero-point units, so g_mc is the usual single-photon optomechanical
// coupling (an angular rate). The radiation-pressure force coefficient is
// then 2*omega_m*g_mc and the photon-number pull of the cavity detuning is
// chi = 2*g_mc^2/omega_m.
struct SystemParams {
    double omega_m = 0.0;    // mechanical frequency
    double kappa = 0.0;      // cavity amplitude decay
    double gamma_m = 0.0;    // mechanical damping
    double gamma_a = 0.0;    // atomic decay
    double delta_c = 0.0;    // cavity-pump detuning, omega_c - omega_l
    double delta_a = 0.0;    // atom-pump detuning, omega_a - omega_l
    double g_mc = 0.0;       // optomechanical coupling
    double g_ac = 0.0;       // Jaynes-Cummings coupling
    double sigma_z_ss = 1.0; // frozen atomic inversion, in [-1, 1]

    // Detuning pull per intracavity photon: delta_tilde = delta_c - chi*n.
    double chi() const { return 2.0 * g_mc * g_mc / omega_m; }

    // Force coefficient in qddot = -omega_m^2 q - gamma_m qdot + W |c|^2.
    double force_coeff() const { return 2.0 * omega_m * g_mc; }

    // Atomic self-energy of the cavity at the pump frequency,
    // g_ac^2 sigma_z / (gamma_a + i delta_a).
    Complex atom_pump_term() const {
        if (g_ac == 0.0) return {0.0, 0.0};
        return g_ac * g_ac * sigma_z_ss / Complex(gamma_a, delta_a);
    }

    // Atom-dressed linear cavity rates at vanishing photon number.
    double kappa_eff() const { return kappa - atom_pump_term().real(); }
    double delta_eff() const { return delta_c - atom_pump_term().imag(); }

    bool sideband_resolved() const { return omega_m > kappa; }

    void validate() const {
        if (!(omega_m > 0.0)) throw NonPhysical("omega_m must be positive");
        if (!(kappa > 0.0)) throw NonPhysical("kappa must be positive");
        if (gamma_m < 0.0) throw NonPhysical("gamma_m must be non-negative");
        if (gamma_a < 0.0) throw NonPhysical("gamma_a must be non-negative");
        if (g_mc < 0.0) throw NonPhysical("g_mc must be non-negative");
        if (g_ac < 0.0) throw NonPhysical("g_ac must be non-negative");
        if (std::abs(sigma_z_ss) > 1.0)
            throw NonPhysical("sigma_z_ss must lie in [-1, 1]");
        if (g_ac > 0.0 && gamma_a == 0.0 && delta_a == 0.0)
            throw NonPhysical("atom coupled exactly on resonance with no decay");
        if (!std::isfinite(omega_m) || !std::isfinite(kappa) ||
            !std::isfinite(gamma_m) || !std::isfinite(gamma_a) ||
            !std::isfinite(delta_c) || !std::isfinite(delta_a) ||
            !std::isfinite(g_mc) || !std::isfinite(g_ac))
            throw NonPhysical("parameters must be finite");
    }
};

// Classical drive amplitudes; both taken real and non-negative.
struct DriveParams {
    double omega_l_amp = 0.0; // pump amplitude Omega_l
    double eps_p = 0.0;       // probe amplitude

    bool weak_probe() const {
        return omega_l_amp == 0.0 || eps_p < 0.1 * omega_l_amp;
    }

    void validate() const {
        if (omega_l_amp < 0.0) throw NonPhysical("omega_l_amp must be non-negative");
        if (eps_p < 0.0) throw NonPhysical("eps_p must be non-negative");
        if (!std::isfinite(omega_l_amp) || !std::isfinite(eps_p))
            throw NonPhysical("drive amplitudes must be finite");
    }
};

}  // namespace omitsim
