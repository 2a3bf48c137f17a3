#include "omitsim/steady_state.hpp"

#include <algorithm>
#include <cmath>

namespace omitsim {
namespace {

// One Newton step on p(u) = u^3 + c2 u^2 + c1 u + c0.
double polish(double u, double c2, double c1, double c0) {
    const double f = ((u + c2) * u + c1) * u + c0;
    const double df = (3.0 * u + 2.0 * c2) * u + c1;
    if (df != 0.0) u -= f / df;
    return u;
}

// Real roots of u^3 + c2 u^2 + c1 u + c0 = 0, analytic (trigonometric form
// for three real roots, Cardano otherwise), each polished with one Newton
// step.
std::vector<double> real_cubic_roots(double c2, double c1, double c0) {
    const double p = c1 - c2 * c2 / 3.0;
    const double q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;
    const double shift = -c2 / 3.0;
    const double disc = q * q / 4.0 + p * p * p / 27.0;
    std::vector<double> roots;
    if (disc > 0.0) {
        // one real root; sign-matched cube root avoids cancellation
        const double s = std::sqrt(disc);
        const double u1 = std::cbrt(-q / 2.0 + s);
        const double u2 = std::cbrt(-q / 2.0 - s);
        roots.push_back(u1 + u2 + shift);
    } else {
        const double r = std::sqrt(std::max(0.0, -p * p * p / 27.0));
        const double phi = std::acos(std::clamp(r == 0.0 ? 0.0 : -q / (2.0 * r), -1.0, 1.0));
        const double m = 2.0 * std::sqrt(std::max(0.0, -p / 3.0));
        for (int k = 0; k < 3; ++k)
            roots.push_back(m * std::cos((phi + 2.0 * kPi * k) / 3.0) + shift);
    }
    for (double& u : roots) u = polish(u, c2, c1, c0);
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

std::vector<double> photon_number_roots(const SystemParams& params,
                                        const DriveParams& drive) {
    params.validate();
    drive.validate();
    const double keff = params.kappa_eff();
    if (keff <= 0.0)
        throw NonPhysical(
            "effective cavity decay kappa_eff <= 0: atomic gain exceeds the "
            "cavity loss; no physical pump-only operating point");
    const double deff = params.delta_eff();
    const double ol2 = drive.omega_l_amp * drive.omega_l_amp;
    if (ol2 == 0.0) return {0.0};

    const double chi = params.chi();
    if (chi == 0.0) return {ol2 / (keff * keff + deff * deff)};

    // In u = chi*n:  u^3 - 2 deff u^2 + (keff^2 + deff^2) u - chi*Ol^2 = 0
    const double c2 = -2.0 * deff;
    const double c1 = keff * keff + deff * deff;
    const double c0 = -chi * ol2;
    std::vector<double> roots;
    const double scale = ol2 / (keff * keff);  // upper bound on n
    for (double u : real_cubic_roots(c2, c1, c0)) {
        double n = u / chi;
        if (n < 0.0) {
            if (n > -1e-12 * scale) {
                n = 0.0;
            } else {
                // spurious negative root from the cubic: only complex pairs
                // can stray; a real negative root signals an algebra bug
                throw NonPhysical("negative photon-number root beyond tolerance");
            }
        }
        roots.push_back(n);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

Eigen::Matrix<Complex, 6, 6> drift_matrix(const SystemParams& p,
                                          const Complex& c_s,
                                          double delta_tilde) {
    const Complex I(0.0, 1.0);
    const double W = p.force_coeff();
    Eigen::Matrix<Complex, 6, 6> M = Eigen::Matrix<Complex, 6, 6>::Zero();
    // basis: (dq, dp, dc, dc*, da, da*)
    M(0, 1) = 1.0;
    M(1, 0) = -p.omega_m * p.omega_m;
    M(1, 1) = -p.gamma_m;
    M(1, 2) = W * std::conj(c_s);
    M(1, 3) = W * c_s;
    M(2, 0) = I * p.g_mc * c_s;
    M(2, 2) = -Complex(p.kappa, delta_tilde);
    M(2, 4) = -I * p.g_ac;
    M(3, 0) = -I * p.g_mc * std::conj(c_s);
    M(3, 3) = -Complex(p.kappa, -delta_tilde);
    M(3, 5) = I * p.g_ac;
    M(4, 2) = I * p.g_ac * p.sigma_z_ss;
    M(4, 4) = -Complex(p.gamma_a, p.delta_a);
    M(5, 3) = -I * p.g_ac * p.sigma_z_ss;
    M(5, 5) = -Complex(p.gamma_a, -p.delta_a);
    return M;
}

namespace {

Eigen::VectorXcd drift_eigenvalues(const SystemParams& p, const Complex& c_s,
                                   double delta_tilde) {
    const auto M = drift_matrix(p, c_s, delta_tilde);
    if (p.g_ac == 0.0) {
        // atom decoupled and never excited: use the optomechanical block
        Eigen::Matrix<Complex, 4, 4> B = M.topLeftCorner<4, 4>();
        Eigen::ComplexEigenSolver<Eigen::Matrix<Complex, 4, 4>> es(B, false);
        return es.eigenvalues();
    }
    Eigen::ComplexEigenSolver<Eigen::Matrix<Complex, 6, 6>> es(M, false);
    return es.eigenvalues();
}

}  // namespace

double max_drift_re(const SystemParams& p, const Complex& c_s,
                    double delta_tilde) {
    const auto ev = drift_eigenvalues(p, c_s, delta_tilde);
    double m = ev(0).real();
    for (Eigen::Index i = 1; i < ev.size(); ++i) m = std::max(m, ev(i).real());
    return m;
}

double min_drift_decay(const SystemParams& p, const Complex& c_s,
                       double delta_tilde) {
    const auto ev = drift_eigenvalues(p, c_s, delta_tilde);
    double m = std::abs(ev(0).real());
    for (Eigen::Index i = 1; i < ev.size(); ++i)
        m = std::min(m, std::abs(ev(i).real()));
    return m;
}

namespace {

SteadyState state_for_root(const SystemParams& p, const DriveParams& drive,
                           double n) {
    SteadyState ss;
    ss.n = n;
    ss.delta_tilde = p.delta_c - p.chi() * n;
    ss.c_s = drive.omega_l_amp /
             (Complex(p.kappa, ss.delta_tilde) - p.atom_pump_term());
    ss.q_s = p.omega_m > 0.0 ? 2.0 * p.g_mc * n / p.omega_m : 0.0;
    ss.a_s = p.g_ac == 0.0
                 ? Complex(0.0, 0.0)
                 : Complex(0.0, 1.0) * p.g_ac * ss.c_s * p.sigma_z_ss /
                       Complex(p.gamma_a, p.delta_a);
    ss.max_re_eigenvalue = max_drift_re(p, ss.c_s, ss.delta_tilde);
    ss.stable = ss.max_re_eigenvalue < 0.0;
    return ss;
}

}  // namespace

SteadyState steady_state(const SystemParams& params, const DriveParams& drive,
                         BranchPolicy policy, std::size_t index) {
    auto roots = photon_number_roots(params, drive);

    std::vector<SteadyState> states;
    states.reserve(roots.size());
    for (double n : roots) states.push_back(state_for_root(params, drive, n));

    std::size_t pick = 0;
    switch (policy) {
        case BranchPolicy::Index:
            if (index >= roots.size())
                throw BranchOutOfRange("branch index " + std::to_string(index) +
                                       " out of range for " +
                                       std::to_string(roots.size()) + " roots");
            pick = index;
            break;
        case BranchPolicy::Lowest: {
            pick = 0;
            for (std::size_t i = 0; i < states.size(); ++i)
                if (states[i].stable) { pick = i; break; }
            break;
        }
        case BranchPolicy::Highest: {
            pick = states.size() - 1;
            for (std::size_t i = states.size(); i-- > 0;)
                if (states[i].stable) { pick = i; break; }
            break;
        }
    }
    SteadyState ss = states[pick];
    ss.all_roots = std::move(roots);
    ss.branch = pick;
    return ss;
}

double self_consistency_residual(const SystemParams& params,
                                 const DriveParams& drive,
                                 const SteadyState& ss) {
    const double dt = params.delta_c - params.chi() * std::norm(ss.c_s);
    const Complex again =
        drive.omega_l_amp / (Complex(params.kappa, dt) - params.atom_pump_term());
    const double scale = std::max({std::abs(ss.c_s), std::abs(again), 1e-300});
    return std::abs(again - ss.c_s) / scale;
}

}  // namespace omitsim
