#include "omitsim/response.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace omitsim {

namespace {
const Complex I(0.0, 1.0);
}

ProbeResponse harmonic_balance_solve(const SystemParams& p,
                                     const SteadyState& ss, double delta,
                                     double eps_p) {
    if (!(eps_p > 0.0)) throw NonPhysical("eps_p must be positive");
    if (!std::isfinite(delta)) throw NonPhysical("delta must be finite");

    const double dt = ss.delta_tilde;
    const Complex cs = ss.c_s;
    const double n = ss.n;
    const double om = p.omega_m;
    // Mechanical row scaled by 1/(2 omega_m) to keep the system well
    // equilibrated; same solution exactly.
    const Complex dm =
        Complex(om * om - delta * delta, -p.gamma_m * delta) / (2.0 * om);

    Eigen::Matrix<Complex, 5, 5> M = Eigen::Matrix<Complex, 5, 5>::Zero();
    // unknowns: [c-, conj(c+), q-, a-, conj(a+)]
    M(0, 0) = Complex(p.kappa, dt - delta);
    M(0, 2) = -I * p.g_mc * cs;
    M(0, 3) = I * p.g_ac;
    M(1, 1) = Complex(p.kappa, -(dt + delta));
    M(1, 2) = I * p.g_mc * std::conj(cs);
    M(1, 4) = -I * p.g_ac;
    M(2, 0) = -p.g_mc * std::conj(cs);
    M(2, 1) = -p.g_mc * cs;
    M(2, 2) = dm;
    M(3, 0) = -I * p.g_ac * p.sigma_z_ss;
    M(3, 3) = Complex(p.gamma_a, p.delta_a - delta);
    M(4, 1) = I * p.g_ac * p.sigma_z_ss;
    M(4, 4) = Complex(p.gamma_a, delta - p.delta_a);

    Eigen::Matrix<Complex, 5, 1> b = Eigen::Matrix<Complex, 5, 1>::Zero();
    b(0) = eps_p;

    Eigen::PartialPivLU<Eigen::Matrix<Complex, 5, 5>> lu(M);
    if (!(lu.rcond() > 1e-12))
        throw SingularResponse(
            "sideband system singular to working precision at delta = " +
                std::to_string(delta) + " rad/s (undamped polariton resonance)",
            delta);
    const Eigen::Matrix<Complex, 5, 1> x = lu.solve(b);

    ProbeResponse r;
    r.delta = delta;
    r.c_minus = x(0);
    r.c_plus = std::conj(x(1));
    r.q_minus = x(2);
    r.a_minus = x(3);
    r.a_plus = std::conj(x(4));
    r.e_out = 2.0 * p.kappa * (r.c_minus / eps_p);
    r.absorption = r.e_out.real();
    r.dispersion = r.e_out.imag();
    (void)n;
    return r;
}

ResponseCoefficients response_coefficients(const SystemParams& p,
                                           const SteadyState& ss,
                                           double delta) {
    ResponseCoefficients k;
    k.delta_tilde = ss.delta_tilde;
    const double n = ss.n;
    const double om = p.omega_m;
    // mechanical response kernel i g^2 |c_s|^2 / (m hbar (om^2 - i gm d - d^2))
    // with m hbar -> 1/(2 om) in zero-point units
    auto mech = [&](double d) {
        return I * 2.0 * om * p.g_mc * p.g_mc * n /
               Complex(om * om - d * d, -p.gamma_m * d);
    };
    auto a_of = [&](double d) {
        return Complex(p.kappa, -(p.delta_c + ss.delta_tilde)) + mech(d);
    };
    auto b_of = [&](double d) {
        if (p.g_ac == 0.0) return Complex(0.0, 0.0);
        return p.g_ac * p.g_ac * p.sigma_z_ss /
               Complex(p.gamma_a, -(p.delta_a + d));
    };
    k.A = a_of(delta);
    k.B = b_of(delta);
    k.C = mech(delta);
    k.A_prime = std::conj(a_of(-delta));
    k.B_prime = std::conj(b_of(-delta));
    return k;
}

PaperCMinus paper_c_minus(const SystemParams& p, const SteadyState& ss,
                          double delta, double eps_p) {
    if (!(eps_p > 0.0)) throw NonPhysical("eps_p must be positive");
    const auto k = response_coefficients(p, ss, delta);
    const Complex den = k.B * k.B_prime + (k.A - k.C) * (k.A_prime + k.C) -
                        (k.A * k.B_prime + k.A_prime * k.B) +
                        2.0 * I * k.C * k.delta_tilde;
    if (den == Complex(0.0, 0.0))
        throw SingularResponse("closed-form denominator vanished at delta = " +
                                   std::to_string(delta) + " rad/s",
                               delta);
    PaperCMinus out;
    out.c_minus = eps_p * (k.A - k.B) / den;
    const Complex hb = harmonic_balance_solve(p, ss, delta, eps_p).c_minus;
    const double scale = std::max(std::abs(hb), 1e-300);
    out.rel_deviation = std::abs(out.c_minus - hb) / scale;
    return out;
}

namespace {

double beta_of(const SystemParams& p, const SteadyState& ss) {
    return p.omega_m * (p.delta_c - ss.delta_tilde) / 2.0;
}

}  // namespace

Complex single_eit_closed_form(const SystemParams& p, const SteadyState& ss,
                               double delta) {
    if (p.g_ac != 0.0)
        throw AtomCouplingPresent("single-window closed form requires g_ac = 0");
    const double x = delta - p.omega_m;
    const double beta = beta_of(p, ss);
    const Complex den =
        Complex(p.kappa, -x) + beta / Complex(p.gamma_m / 2.0, -x);
    return 2.0 * p.kappa / den;
}

EitRoots single_eit_roots(const SystemParams& p, const SteadyState& ss) {
    if (p.g_ac != 0.0)
        throw AtomCouplingPresent("single-window roots require g_ac = 0");
    const double g2 = p.kappa - p.gamma_m / 2.0;
    const double arg =
        -g2 * g2 - 2.0 * p.omega_m * (ss.delta_tilde - p.delta_c);
    const Complex root = std::sqrt(Complex(arg, 0.0));
    EitRoots out;
    const Complex base(0.0, -(2.0 * p.kappa + p.gamma_m) / 4.0);
    out.x = {base + 0.5 * root, base - 0.5 * root};
    out.split = arg > 0.0;
    return out;
}

namespace {

// product of linear factors (a + b x)
std::vector<Complex> poly_mul(const std::vector<Complex>& u,
                              const std::vector<Complex>& v) {
    std::vector<Complex> w(u.size() + v.size() - 1, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) w[i + j] += u[i] * v[j];
    return w;
}

std::vector<Complex> companion_roots(const std::vector<Complex>& coeffs) {
    const std::size_t deg = coeffs.size() - 1;
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(deg, deg);
    for (std::size_t i = 0; i + 1 < deg; ++i) C(i + 1, i) = 1.0;
    for (std::size_t i = 0; i < deg; ++i)
        C(i, deg - 1) = -coeffs[i] / coeffs[deg];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    std::vector<Complex> roots(deg);
    for (std::size_t i = 0; i < deg; ++i) roots[i] = es.eigenvalues()(i);
    return roots;
}

}  // namespace

ResponsePolynomial response_denominator_polynomial(const SystemParams& p,
                                                   const SteadyState& ss) {
    const double beta = beta_of(p, ss);
    const double hw = p.gamma_m / 2.0;
    ResponsePolynomial out;
    // cavity factor  kappa - i (x - (delta_tilde - omega_m))
    const std::vector<Complex> fc = {
        Complex(p.kappa, ss.delta_tilde - p.omega_m), Complex(0.0, -1.0)};
    // mechanical factor  hw - i x
    const std::vector<Complex> fm = {Complex(hw, 0.0), Complex(0.0, -1.0)};
    if (p.g_ac == 0.0) {
        // (kappa - i x)(hw - i x) + beta: the single-window quadratic, whose
        // roots reproduce the printed two-root formula exactly
        out.coeffs = poly_mul({Complex(p.kappa, 0.0), Complex(0.0, -1.0)}, fm);
        out.coeffs[0] += beta;
    } else {
        // atomic factor  gamma_a + i (delta_a - omega_m - x)
        const std::vector<Complex> fa = {
            Complex(p.gamma_a, p.delta_a - p.omega_m), Complex(0.0, -1.0)};
        out.coeffs = poly_mul(poly_mul(fc, fm), fa);
        const double g2s = p.g_ac * p.g_ac * p.sigma_z_ss;
        for (std::size_t i = 0; i < 2; ++i) {
            out.coeffs[i] -= g2s * fm[i];
            out.coeffs[i] += beta * fa[i];
        }
    }
    out.roots = companion_roots(out.coeffs);
    out.paper_numerator_roots = {
        Complex(0.0, -p.gamma_m / 2.0),
        0.5 * Complex(p.delta_a - 2.0 * p.omega_m, -p.gamma_a)};
    return out;
}

}  // namespace omitsim
