#pragma once

#include <array>
#include <vector>

#include "omitsim/steady_state.hpp"

namespace omitsim {

// First-order sideband amplitudes at one probe detuning, plus the rescaled
// output field E_out = 2 kappa c_- / eps_p whose real/imaginary parts are the
// absorption and dispersion quadratures.
struct ProbeResponse {
    double delta = 0.0;
    Complex c_minus{}, c_plus{};
    Complex q_minus{};             // q_+ = conj(q_-) since <q> is real
    Complex a_minus{}, a_plus{};
    Complex e_out{};
    double absorption = 0.0;
    double dispersion = 0.0;
};

// Ground truth: substitute the e^{-i delta t}/e^{+i delta t} ansatz into the
// mean-field equations, collect coefficients, and solve the resulting
// 5-unknown complex linear system (c-, conj(c+), q-, a-, conj(a+)) by
// partial-pivot LU. Throws SingularResponse when the system is singular to
// working precision (reciprocal condition below 1e-12).
ProbeResponse harmonic_balance_solve(const SystemParams& params,
                                     const SteadyState& ss, double delta,
                                     double eps_p);

// The printed closed-form coefficients for c_-.
struct ResponseCoefficients {
    Complex A{}, A_prime{}, B{}, B_prime{}, C{};
    double delta_tilde = 0.0;
};

ResponseCoefficients response_coefficients(const SystemParams& params,
                                           const SteadyState& ss, double delta);

// Literal evaluation of the printed closed form
//   c_- = eps (A - B) / [B B' + (A - C)(A' + C) - (A B' + A' B) + 2 i C dt],
// kept verbatim as a comparison mode. rel_deviation is the relative distance
// from the harmonic-balance solution at the same inputs; agreement is
// reported, never assumed.
struct PaperCMinus {
    Complex c_minus{};
    double rel_deviation = 0.0;
};

PaperCMinus paper_c_minus(const SystemParams& params, const SteadyState& ss,
                          double delta, double eps_p);

// Single-window closed form (g_ac = 0 only):
//   E_out = 2k / [k - i x + beta/(gamma_m/2 - i x)],  x = delta - omega_m,
// with beta = omega_m (delta_c - delta_tilde)/2. Throws AtomCouplingPresent
// when g_ac != 0.
Complex single_eit_closed_form(const SystemParams& params,
                               const SteadyState& ss, double delta);

// The two roots of the single-window response denominator in x = delta -
// omega_m. split is true when the square-root argument is positive (resolved
// peak splitting); otherwise the roots are purely imaginary.
struct EitRoots {
    std::array<Complex, 2> x;
    bool split = false;
};

EitRoots single_eit_roots(const SystemParams& params, const SteadyState& ss);

// Sideband-resolved response denominator as a polynomial in x = delta -
// omega_m: cubic with the atom coupled, quadratic (reducing to the
// single-window roots) when g_ac = 0. Coefficients ascending in power; roots
// computed numerically. paper_numerator_roots carries the two printed
// numerator roots of the double-Fano discussion as a diagnostic.
struct ResponsePolynomial {
    std::vector<Complex> coeffs;
    std::vector<Complex> roots;
    std::array<Complex, 2> paper_numerator_roots;
};

ResponsePolynomial response_denominator_polynomial(const SystemParams& params,
                                                   const SteadyState& ss);

}  // namespace omitsim
