#include "omitsim/fano.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <Eigen/Dense>

namespace omitsim {

FanoChannelParams mech_channel(const SystemParams& p, const SteadyState& ss) {
    if (p.g_mc == 0.0 || ss.n == 0.0)
        throw ZeroCoupling("mechanical Fano channel needs g_mc > 0 and a "
                           "populated cavity");
    FanoChannelParams ch;
    ch.omega_offset = p.delta_c - p.omega_m;
    ch.beta = p.omega_m * (p.delta_c - ss.delta_tilde) / 2.0;
    ch.q = -ch.omega_offset / p.kappa;
    ch.gamma = p.kappa * ch.beta /
               (p.kappa * p.kappa + ch.omega_offset * ch.omega_offset);
    return ch;
}

FanoChannelParams atom_channel(const SystemParams& p) {
    if (p.g_ac == 0.0)
        throw ZeroCoupling("atomic Fano channel needs g_ac > 0");
    if (!(p.gamma_a > 0.0))
        throw NonPhysical("atomic Fano channel needs gamma_a > 0");
    FanoChannelParams ch;
    ch.q = -p.delta_a / p.gamma_a;
    ch.gamma = p.gamma_a * p.g_ac * p.g_ac /
               (p.gamma_a * p.gamma_a + p.delta_a * p.delta_a);
    return ch;
}

double fano_profile(const FanoChannelParams& ch, double delta, double omega_m) {
    if (!(ch.gamma > 0.0)) throw NonPhysical("fano_profile needs gamma > 0");
    const double x = (delta - omega_m) / ch.gamma - ch.q;
    const double num = (x + ch.q) * (x + ch.q);
    return 2.0 / (1.0 + ch.q * ch.q) * num / (1.0 + x * x);
}

namespace {

struct Model {
    // value and gradient of amplitude (x+q)^2/((1+q^2)(1+x^2))
    static double eval(const std::array<double, 4>& th, double D,
                       std::array<double, 4>* grad) {
        const double q = th[0], G = th[1], c = th[2], A = th[3];
        const double u = (D - c) / G;
        const double x = u - q;
        const double opq = 1.0 + q * q;
        const double opx = 1.0 + x * x;
        const double m = A * u * u / (opq * opx);
        if (grad) {
            const double dm_dx =
                2.0 * A * (x + q) * (1.0 - q * x) / (opq * opx * opx);
            const double dm_dq_fixed_x =
                2.0 * A * (x + q) / (opq * opx) - m * 2.0 * q / opq;
            (*grad)[0] = dm_dq_fixed_x - dm_dx;        // total d/dq (dx/dq=-1)
            (*grad)[1] = dm_dx * (-(D - c) / (G * G)); // d/dGamma
            (*grad)[2] = dm_dx * (-1.0 / G);           // d/dcenter
            (*grad)[3] = m / A;                        // d/damplitude
        }
        return m;
    }
};

}  // namespace

FanoFit fit_fano(const Spectrum& sp, std::size_t first, std::size_t last,
                 const std::optional<FanoFit>& init) {
    if (last > sp.grid.size() || first >= last)
        throw NonPhysical("fit window out of range");
    const std::size_t npts = last - first;
    if (npts < 8)
        throw NonPhysical("fit window must contain at least 8 points");

    std::array<double, 4> th;
    if (init) {
        th = {init->q, init->gamma, init->center, init->amplitude};
    } else {
        // initialize from the deepest minimum (the zero, x = -q sits at the
        // center) and the nearest maximum (x = 1/q)
        std::size_t imin = first, imax = first;
        for (std::size_t i = first; i < last; ++i) {
            if (sp.absorption[i] < sp.absorption[imin]) imin = i;
            if (sp.absorption[i] > sp.absorption[imax]) imax = i;
        }
        std::size_t ipk = imax;
        double best = -1.0;
        for (std::size_t i = first + 1; i + 1 < last; ++i) {
            if (sp.absorption[i] > sp.absorption[i - 1] &&
                sp.absorption[i] > sp.absorption[i + 1]) {
                const double d = std::abs(sp.grid[i] - sp.grid[imin]);
                if (best < 0.0 || d < best) {
                    best = d;
                    ipk = i;
                }
            }
        }
        const double zero_loc = sp.grid[imin];
        const double peak_loc = sp.grid[ipk];
        double q0 = peak_loc >= zero_loc ? 2.0 : -2.0;
        double g0 = std::abs(peak_loc - zero_loc) / (std::abs(q0) + 0.5);
        if (!(g0 > 0.0)) g0 = (sp.grid[last - 1] - sp.grid[first]) / 10.0;
        th = {q0, g0, zero_loc, std::max(sp.absorption[ipk], 1e-6)};
    }

    const auto rms = [&](const std::array<double, 4>& t) {
        double s = 0.0;
        for (std::size_t i = first; i < last; ++i) {
            const double r = Model::eval(t, sp.grid[i], nullptr) - sp.absorption[i];
            s += r * r;
        }
        return s;
    };

    double cost = rms(th);
    double lambda = 1e-3;
    bool converged = false;
    constexpr int kMaxIter = 200;
    for (int it = 0; it < kMaxIter; ++it) {
        Eigen::Matrix4d H = Eigen::Matrix4d::Zero();
        Eigen::Vector4d g = Eigen::Vector4d::Zero();
        for (std::size_t i = first; i < last; ++i) {
            std::array<double, 4> J;
            const double r =
                Model::eval(th, sp.grid[i], &J) - sp.absorption[i];
            for (int a = 0; a < 4; ++a) {
                g(a) += J[a] * r;
                for (int b = 0; b < 4; ++b) H(a, b) += J[a] * J[b];
            }
        }
        Eigen::Matrix4d Hd = H;
        for (int a = 0; a < 4; ++a)
            Hd(a, a) += lambda * (H(a, a) + 1e-30);
        const Eigen::Vector4d step = Hd.ldlt().solve(-g);
        std::array<double, 4> trial = th;
        double shrink = 1.0;
        for (int a = 0; a < 4; ++a) trial[a] += step(a);
        while (trial[1] <= 0.0 && shrink > 1e-6) {
            shrink *= 0.5;
            for (int a = 0; a < 4; ++a) trial[a] = th[a] + shrink * step(a);
        }
        const double trial_cost = rms(trial);
        if (trial_cost < cost) {
            double norm_step = 0.0, norm_th = 0.0;
            for (int a = 0; a < 4; ++a) {
                norm_step += step(a) * step(a);
                norm_th += th[a] * th[a];
            }
            th = trial;
            cost = trial_cost;
            lambda = std::max(lambda / 3.0, 1e-14);
            if (std::sqrt(norm_step) <= 1e-10 * (1.0 + std::sqrt(norm_th))) {
                converged = true;
                break;
            }
        } else {
            lambda *= 10.0;
            if (lambda > 1e14) break;
        }
    }

    FanoFit fit;
    fit.q = th[0];
    fit.gamma = th[1];
    fit.center = th[2];
    fit.amplitude = th[3];
    fit.residual = std::sqrt(cost / static_cast<double>(npts));
    fit.symmetric_limit = std::abs(th[0]) > 1e3;
    fit.converged = converged;
    return fit;
}

}  // namespace omitsim
