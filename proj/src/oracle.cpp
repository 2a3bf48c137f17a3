#include "omitsim/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace omitsim {
namespace oracle {

namespace {
const Complex I(0.0, 1.0);

struct State {
    double q, p;
    Complex c, a;
};

inline State axpy(const State& s, double h, const State& d) {
    return {s.q + h * d.q, s.p + h * d.p, s.c + h * d.c, s.a + h * d.a};
}

}  // namespace

double aligned_dt(double delta, double dt_max) {
    const double period = 2.0 * kPi / std::abs(delta);
    const double steps = std::ceil(period / dt_max);
    return period / steps;
}

double default_dt(const SystemParams& p, double delta, int divisor) {
    const double wmax = std::max({p.omega_m, std::abs(delta),
                                  std::abs(p.delta_c), std::abs(p.delta_a)});
    return aligned_dt(delta, (2.0 * kPi / wmax) / divisor);
}

double settle_time(const SystemParams& p, const SteadyState& ss, double folds) {
    const double rate = min_drift_decay(p, ss.c_s, ss.delta_tilde);
    if (!(rate > 0.0)) throw NonPhysical("no decaying drift mode to settle on");
    return folds / rate;
}

Trajectory integrate(const SystemParams& p, const DriveParams& drive,
                     double delta, double t_final, double dt,
                     int store_stride) {
    p.validate();
    drive.validate();
    if (!(dt > 0.0) || !(t_final > 0.0))
        throw NonPhysical("dt and t_final must be positive");
    if (store_stride < 1) throw NonPhysical("store_stride must be >= 1");
    const double wmax = std::max({p.omega_m, std::abs(delta),
                                  std::abs(p.delta_c), std::abs(p.delta_a)});
    if (dt > (2.0 * kPi / wmax) / 50.0 * (1.0 + 1e-12))
        throw NonPhysical("dt too coarse: need at least 50 steps per fastest "
                          "period");

    long long steps = static_cast<long long>(std::ceil(t_final / dt - 1e-9));
    steps = ((steps + store_stride - 1) / store_stride) * store_stride;

    const double W = p.force_coeff();
    const double om2 = p.omega_m * p.omega_m;
    const Complex cav_pole(-p.kappa, -p.delta_c);
    const Complex atom_pole(-p.gamma_a, -p.delta_a);
    const double Ol = drive.omega_l_amp;
    const double eps = drive.eps_p;

    auto deriv = [&](const State& s, double t) -> State {
        State d;
        d.q = s.p;
        d.p = -om2 * s.q - p.gamma_m * s.p + W * std::norm(s.c);
        const Complex drive_t =
            Ol + (eps != 0.0 ? eps * std::polar(1.0, -delta * t)
                             : Complex(0.0, 0.0));
        d.c = cav_pole * s.c + I * p.g_mc * s.c * s.q - I * p.g_ac * s.a +
              drive_t;
        d.a = atom_pole * s.a + I * p.g_ac * p.sigma_z_ss * s.c;
        return d;
    };

    Trajectory traj;
    traj.dt = dt;
    traj.stride = store_stride;
    const std::size_t n_store = static_cast<std::size_t>(steps / store_stride) + 1;
    traj.t.reserve(n_store);
    traj.q.reserve(n_store);
    traj.p.reserve(n_store);
    traj.c.reserve(n_store);
    traj.sm.reserve(n_store);

    State s{0.0, 0.0, {0.0, 0.0}, {0.0, 0.0}};
    for (long long i = 0; i <= steps; ++i) {
        const double t = static_cast<double>(i) * dt;
        if (i % store_stride == 0) {
            traj.t.push_back(t);
            traj.q.push_back(s.q);
            traj.p.push_back(s.p);
            traj.c.push_back(s.c);
            traj.sm.push_back(s.a);
        }
        if (i == steps) break;
        const State k1 = deriv(s, t);
        const State k2 = deriv(axpy(s, 0.5 * dt, k1), t + 0.5 * dt);
        const State k3 = deriv(axpy(s, 0.5 * dt, k2), t + 0.5 * dt);
        const State k4 = deriv(axpy(s, dt, k3), t + dt);
        s.q += dt / 6.0 * (k1.q + 2.0 * (k2.q + k3.q) + k4.q);
        s.p += dt / 6.0 * (k1.p + 2.0 * (k2.p + k3.p) + k4.p);
        s.c += dt / 6.0 * (k1.c + 2.0 * (k2.c + k3.c) + k4.c);
        s.a += dt / 6.0 * (k1.a + 2.0 * (k2.a + k3.a) + k4.a);
        if (std::abs(s.q) > 1e12 || std::abs(s.p) > 1e12 ||
            std::abs(s.c) > 1e12 || std::abs(s.a) > 1e12)
            throw Divergence("trajectory diverged (unstable parameters) at t = " +
                                 std::to_string(t + dt) + " s",
                             t + dt);
    }
    return traj;
}

namespace {

HarmonicDecomposition project_window(const Trajectory& traj,
                                     const std::vector<Complex>& series,
                                     double delta, std::size_t begin,
                                     std::size_t count) {
    HarmonicDecomposition h;
    Complex dc(0.0, 0.0), minus(0.0, 0.0), plus(0.0, 0.0);
    for (std::size_t k = 0; k < count; ++k) {
        const double t = traj.t[begin + k];
        const Complex rot = std::polar(1.0, delta * t);
        const Complex v = series[begin + k];
        dc += v;
        minus += v * rot;
        plus += v / rot;
    }
    const double inv = 1.0 / static_cast<double>(count);
    h.dc = dc * inv;
    h.minus = minus * inv;
    h.plus = plus * inv;
    h.t_start = traj.t[begin];
    h.t_end = traj.t[begin + count - 1] + traj.sample_spacing();
    return h;
}

}  // namespace

HarmonicSet project_harmonics(const Trajectory& traj, double delta,
                              int n_periods) {
    if (n_periods < 1) throw NonPhysical("n_periods must be >= 1");
    const double period = 2.0 * kPi / std::abs(delta);
    const double h = traj.sample_spacing();
    const double samples_f = static_cast<double>(n_periods) * period / h;
    const double samples_r = std::round(samples_f);
    if (std::abs(samples_f - samples_r) > 1e-6 * samples_f)
        throw NonPhysical("sampling is not aligned with the probe period; "
                          "choose dt via aligned_dt");
    const std::size_t wlen = static_cast<std::size_t>(samples_r);
    if (traj.t.size() < 2 * wlen + 1)
        throw NotSettled("trajectory too short for two projection windows");

    const std::size_t n = traj.t.size();
    const std::size_t b2 = n - wlen;        // final window
    const std::size_t b1 = n - 2 * wlen;    // preceding window

    const auto prev = project_window(traj, traj.c, delta, b1, wlen);
    const auto last = project_window(traj, traj.c, delta, b2, wlen);
    const double dc_scale = std::max(std::abs(last.dc), 1e-300);
    if (std::abs(last.dc - prev.dc) > 1e-6 * dc_scale)
        throw NotSettled("dc component drifts by more than 1e-6 relative "
                         "between consecutive windows");

    HarmonicSet set;
    set.c = last;

    std::vector<Complex> qc(traj.q.size());
    for (std::size_t i = 0; i < traj.q.size(); ++i) qc[i] = traj.q[i];
    auto hq = project_window(traj, qc, delta, b2, wlen);
    // <q> is real, so the +delta coefficient must mirror the -delta one
    hq.plus = std::conj(hq.minus);
    set.q = hq;

    set.sigma_minus = project_window(traj, traj.sm, delta, b2, wlen);
    return set;
}

Complex project_tone(const Trajectory& traj, const std::vector<Complex>& series,
                     double omega, std::size_t n_samples) {
    if (n_samples == 0 || n_samples > series.size())
        throw NonPhysical("bad projection window");
    const std::size_t begin = series.size() - n_samples;
    Complex acc(0.0, 0.0);
    for (std::size_t k = 0; k < n_samples; ++k)
        acc += series[begin + k] * std::polar(1.0, omega * traj.t[begin + k]);
    return acc / static_cast<double>(n_samples);
}

}  // namespace oracle
}  // namespace omitsim
