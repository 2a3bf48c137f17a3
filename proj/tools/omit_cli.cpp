// Command-line front end: figure presets, detuning sweeps, spectral feature
// reports, Fano fitting, and the time-domain cross-check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "omitsim/config.hpp"
#include "omitsim/csvio.hpp"
#include "omitsim/fano.hpp"
#include "omitsim/features.hpp"
#include "omitsim/oracle.hpp"
#include "omitsim/presets.hpp"
#include "omitsim/svgplot.hpp"

using json = nlohmann::ordered_json;
using namespace omitsim;

namespace {

// exit codes per subcommand contract
constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;
constexpr int kExitCsv = 4;
constexpr int kExitNoConvergence = 5;
constexpr int kExitOracle = 6;

struct CommonOpts {
    std::string preset;
    std::string config_path;
    std::string grid;          // start:stop:count in omega_m units
    std::string branch;        // lowest | highest | index
    double sigma_z = 99.0;     // sentinel: unset
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--preset", o.preset, "figure preset name");
    cmd->add_option("--config", o.config_path, "key = value config file");
    cmd->add_option("--grid", o.grid,
                    "sweep grid start:stop:count in units of omega_m");
    cmd->add_option("--branch", o.branch, "lowest | highest | <index>");
    cmd->add_option("--sigma-z", o.sigma_z, "override frozen inversion");
}

RunConfig resolve_config(const CommonOpts& o) {
    std::optional<RunConfig> base;
    if (!o.preset.empty()) {
        const auto p = find_preset(o.preset);
        if (!p) {
            std::string names;
            for (const auto& q : preset_catalog()) names += " " + q.name;
            throw ConfigError("unknown preset '" + o.preset + "'; available:" +
                              names);
        }
        base = config_from_preset(*p);
    }
    RunConfig cfg = base.value_or(RunConfig{});
    if (!o.config_path.empty()) cfg = load_config_file(o.config_path, cfg);
    if (!o.grid.empty()) {
        double lo, hi;
        unsigned long n;
        if (std::sscanf(o.grid.c_str(), "%lf:%lf:%lu", &lo, &hi, &n) != 3)
            throw ConfigError("bad --grid, expected start:stop:count");
        cfg.grid_start = lo;
        cfg.grid_stop = hi;
        cfg.grid_count = n;
    }
    if (!o.branch.empty()) {
        if (o.branch == "lowest") cfg.branch = BranchPolicy::Lowest;
        else if (o.branch == "highest") cfg.branch = BranchPolicy::Highest;
        else {
            try {
                cfg.branch_index = std::stoul(o.branch);
                cfg.branch = BranchPolicy::Index;
            } catch (...) {
                throw ConfigError("bad --branch: " + o.branch);
            }
        }
    }
    if (o.sigma_z != 99.0) cfg.sys.sigma_z_ss = o.sigma_z;
    if (o.preset.empty() && o.config_path.empty())
        throw ConfigError("need --preset or --config");
    cfg.validate();
    return cfg;
}

json params_json(const RunConfig& cfg) {
    json j;
    j["omega_m_mhz"] = rads_to_mhz(cfg.sys.omega_m);
    j["kappa_mhz"] = rads_to_mhz(cfg.sys.kappa);
    j["gamma_m_mhz"] = rads_to_mhz(cfg.sys.gamma_m);
    j["gamma_a_mhz"] = rads_to_mhz(cfg.sys.gamma_a);
    j["delta_c_mhz"] = rads_to_mhz(cfg.sys.delta_c);
    j["delta_a_mhz"] = rads_to_mhz(cfg.sys.delta_a);
    j["g_mc_mhz"] = rads_to_mhz(cfg.sys.g_mc);
    j["g_ac_mhz"] = rads_to_mhz(cfg.sys.g_ac);
    j["sigma_z"] = cfg.sys.sigma_z_ss;
    j["omega_l_mhz"] = rads_to_mhz(cfg.drive.omega_l_amp);
    j["eps_p_mhz"] = rads_to_mhz(cfg.eps_p_effective());
    return j;
}

json features_json(const SpectralFeatures& f, double omega_m) {
    json j;
    j["peak_count"] = f.interior_peak_count();
    j["dip_count"] = f.dips.size();
    j["window_count"] = f.windows.size();
    j["fano_zero_count"] = f.fano_zeros.size();
    j["peaks"] = json::array();
    for (const auto& p : f.peaks) {
        json q;
        q["delta_over_omega_m"] = p.location / omega_m;
        q["height"] = p.height;
        q["half_width_over_omega_m"] = p.half_width / omega_m;
        q["boundary"] = p.boundary;
        j["peaks"].push_back(q);
    }
    j["dips"] = json::array();
    for (const auto& d : f.dips) {
        json q;
        q["delta_over_omega_m"] = d.location / omega_m;
        q["depth"] = d.depth;
        q["left_peak"] = d.left_peak;
        q["right_peak"] = d.right_peak;
        j["dips"].push_back(q);
    }
    j["windows"] = json::array();
    for (const auto& w : f.windows) {
        json q;
        q["dip"] = w.dip;
        q["left_peak"] = w.left_peak;
        q["right_peak"] = w.right_peak;
        q["width_over_omega_m"] = w.width / omega_m;
        j["windows"].push_back(q);
    }
    j["fano_zeros"] = json::array();
    for (const auto& z : f.fano_zeros) {
        json q;
        q["delta_over_omega_m"] = z.location / omega_m;
        q["value"] = z.value;
        q["flank_ratio"] = z.flank_ratio;
        j["fano_zeros"].push_back(q);
    }
    return j;
}

void maybe_write_json(const std::string& path, const json& j) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SimError("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
}

int run_sweep(const CommonOpts& common, const std::string& out_csv,
              const std::string& out_json, const std::string& out_svg) {
    RunConfig cfg;
    try {
        cfg = resolve_config(common);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    try {
        DriveParams drive = cfg.drive;
        drive.eps_p = cfg.eps_p_effective();
        const SteadyState ss =
            steady_state(cfg.sys, drive, cfg.branch, cfg.branch_index);
        if (!ss.stable)
            std::cerr << "warning: selected branch is dynamically unstable "
                         "(max Re lambda = "
                      << ss.max_re_eigenvalue
                      << " /s); spectrum is the formal response of the "
                         "stationary point\n";
        const Spectrum sp =
            sweep(cfg.sys, drive, cfg.grid(), cfg.branch, cfg.branch_index);
        write_spectrum_csv(out_csv, sp, cfg.sys.omega_m);

        // summary features come from the quantized values actually written,
        // so re-ingesting the CSV reproduces them bitwise
        const SpectralFeatures f =
            extract_features(quantize_like_csv(sp), cfg.thresholds);
        json j;
        j["params"] = params_json(cfg);
        j["grid"] = {{"start_over_omega_m", cfg.grid_start},
                     {"stop_over_omega_m", cfg.grid_stop},
                     {"count", cfg.grid_count}};
        j["steady_state"] = {
            {"photon_number", ss.n},
            {"branch", ss.branch},
            {"root_count", ss.all_roots.size()},
            {"stable", ss.stable},
            {"max_re_eigenvalue", ss.max_re_eigenvalue},
            {"delta_tilde_mhz", rads_to_mhz(ss.delta_tilde)}};
        j["features"] = features_json(f, cfg.sys.omega_m);
        j["csv"] = out_csv;
        maybe_write_json(out_json, j);
        if (!out_svg.empty())
            write_spectrum_svg(out_svg, sp, cfg.sys.omega_m,
                               common.preset.empty() ? "sweep" : common.preset);
        return 0;
    } catch (const SimError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return kExitSolver;
    }
}

int run_features(const CommonOpts& common, const std::string& csv_in,
                 const std::string& out_json, double dip_fraction,
                 double zero_threshold, double asym_ratio) {
    try {
        Spectrum sp;
        double omega_m = 0.0;
        FeatureThresholds thr;
        thr.dip_fraction = dip_fraction;
        thr.zero_threshold = zero_threshold;
        thr.asym_ratio = asym_ratio;
        if (!csv_in.empty()) {
            const CsvSpectrum cs = read_spectrum_csv(csv_in);
            sp = cs.spectrum;
            omega_m = cs.omega_m;
        } else {
            RunConfig cfg;
            try {
                cfg = resolve_config(common);
                thr = cfg.thresholds;
            } catch (const ConfigError& e) {
                std::cerr << "config error: " << e.what() << "\n";
                return kExitConfig;
            }
            DriveParams drive = cfg.drive;
            drive.eps_p = cfg.eps_p_effective();
            sp = quantize_like_csv(
                sweep(cfg.sys, drive, cfg.grid(), cfg.branch, cfg.branch_index));
            omega_m = cfg.sys.omega_m;
        }
        const SpectralFeatures f = extract_features(sp, thr);
        maybe_write_json(out_json, features_json(f, omega_m));
        return 0;
    } catch (const MalformedCsv& e) {
        std::cerr << "csv error: " << e.what() << "\n";
        return kExitCsv;
    } catch (const EmptySpectrum& e) {
        std::cerr << "csv error: " << e.what() << "\n";
        return kExitCsv;
    } catch (const SimError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolver;
    }
}

int run_fano_fit(const std::string& csv_in, const std::string& window,
                 const std::string& out_json) {
    try {
        const CsvSpectrum cs = read_spectrum_csv(csv_in);
        std::size_t first = 0, last = cs.spectrum.grid.size();
        if (!window.empty()) {
            double lo, hi;
            if (std::sscanf(window.c_str(), "%lf:%lf", &lo, &hi) != 2) {
                std::cerr << "config error: bad --window, expected "
                             "lo:hi in delta/omega_m units\n";
                return kExitConfig;
            }
            const auto& g = cs.spectrum.grid;
            first = std::lower_bound(g.begin(), g.end(), lo * cs.omega_m) -
                    g.begin();
            last = std::upper_bound(g.begin(), g.end(), hi * cs.omega_m) -
                   g.begin();
        }
        const FanoFit fit = fit_fano(cs.spectrum, first, last);
        json j;
        j["q"] = fit.q;
        j["gamma_mhz"] = rads_to_mhz(fit.gamma);
        j["center_over_omega_m"] =
            cs.omega_m != 0.0 ? fit.center / cs.omega_m : 0.0;
        j["amplitude"] = fit.amplitude;
        j["residual_rms"] = fit.residual;
        j["converged"] = fit.converged;
        j["symmetric_limit"] = fit.symmetric_limit;
        maybe_write_json(out_json, j);
        if (fit.symmetric_limit) return 0;  // reported, not an error
        return fit.converged ? 0 : kExitNoConvergence;
    } catch (const MalformedCsv& e) {
        std::cerr << "csv error: " << e.what() << "\n";
        return kExitCsv;
    } catch (const SimError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolver;
    }
}

int run_oracle_check(const CommonOpts& common, double gamma_m_mhz, int points,
                     const std::string& range, double threshold, int dt_div,
                     const std::string& out_json,
                     const std::string& dump_traj) {
    RunConfig cfg;
    try {
        cfg = resolve_config(common);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    double lo = 0.9, hi = 1.1;
    if (!range.empty() && std::sscanf(range.c_str(), "%lf:%lf", &lo, &hi) != 2) {
        std::cerr << "config error: bad --range, expected lo:hi\n";
        return kExitConfig;
    }
    cfg.sys.gamma_m = mhz_to_rads(gamma_m_mhz);  // override on both sides
    DriveParams drive = cfg.drive;
    drive.eps_p = cfg.eps_p_effective();

    try {
        SteadyState ss;
        double t_settle = 0.0;
        try {
            ss = steady_state(cfg.sys, drive, cfg.branch, cfg.branch_index);
            t_settle = ss.stable ? oracle::settle_time(cfg.sys, ss)
                                 : 20.0 / cfg.sys.kappa;
        } catch (const NonPhysical&) {
            // no physical operating point (e.g. kappa_eff <= 0): integrate
            // anyway so the blow-up is reported as Divergence
            ss = SteadyState{};
            t_settle = 20.0 / cfg.sys.kappa;
        }

        json table = json::array();
        double max_err = 0.0;
        for (int k = 0; k < points; ++k) {
            const double frac =
                points > 1 ? static_cast<double>(k) / (points - 1) : 0.0;
            const double delta = (lo + (hi - lo) * frac) * cfg.sys.omega_m;
            const double dt = oracle::default_dt(cfg.sys, delta, dt_div);
            const double period = 2.0 * kPi / delta;
            const int spp = static_cast<int>(std::lround(period / dt));
            int stride = 1;
            for (int s = spp / 20; s >= 1; --s)
                if (spp % s == 0) { stride = s; break; }
            const int n_periods = 20;
            const double t_final =
                t_settle + 2.0 * n_periods * period + 2.0 * dt;
            const auto traj = oracle::integrate(cfg.sys, drive, delta, t_final,
                                                dt, stride);
            if (!dump_traj.empty() && k == points / 2)
                write_trajectory_csv(dump_traj, traj);
            const auto h = oracle::project_harmonics(traj, delta, n_periods);
            const ProbeResponse r =
                harmonic_balance_solve(cfg.sys, ss, delta, drive.eps_p);
            const double err =
                std::abs(h.c.minus - r.c_minus) / std::abs(r.c_minus);
            max_err = std::max(max_err, err);
            json row;
            row["delta_over_omega_m"] = delta / cfg.sys.omega_m;
            row["oracle_re"] = h.c.minus.real();
            row["oracle_im"] = h.c.minus.imag();
            row["solver_re"] = r.c_minus.real();
            row["solver_im"] = r.c_minus.imag();
            row["rel_error"] = err;
            table.push_back(row);
        }
        json j;
        j["params"] = params_json(cfg);
        j["gamma_m_override_mhz"] = gamma_m_mhz;
        j["threshold"] = threshold;
        j["max_rel_error"] = max_err;
        j["points"] = table;
        j["pass"] = max_err < threshold;
        maybe_write_json(out_json, j);
        return max_err < threshold ? 0 : 1;
    } catch (const Divergence& e) {
        std::cerr << "Divergence: " << e.what() << "\n";
        return kExitOracle;
    } catch (const NotSettled& e) {
        std::cerr << "NotSettled: " << e.what() << "\n";
        return kExitOracle;
    } catch (const SimError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return kExitSolver;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "omit: weak-probe response of a hybrid atom-cavity optomechanical "
        "system"};
    app.require_subcommand(1);

    // sweep
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "sweep the probe detuning and emit spectrum CSV + summary");
    CommonOpts so;
    std::string sweep_out = "spectrum.csv", sweep_json, sweep_svg;
    add_common(sweep_cmd, so);
    sweep_cmd->add_option("--out", sweep_out, "output CSV path");
    sweep_cmd->add_option("--json", sweep_json, "summary JSON path (default stdout)");
    sweep_cmd->add_option("--plot", sweep_svg, "self-contained SVG plot path");

    // features
    auto* feat_cmd = app.add_subcommand(
        "features", "extract peaks/dips/windows/fano zeros from a spectrum");
    CommonOpts fo;
    std::string feat_csv, feat_json;
    double f_dip = 0.10, f_zero = 0.02, f_asym = 2.0;
    add_common(feat_cmd, fo);
    feat_cmd->add_option("--csv-in", feat_csv, "spectrum CSV to analyze");
    feat_cmd->add_option("--json", feat_json, "report path (default stdout)");
    feat_cmd->add_option("--dip-fraction", f_dip, "transparency threshold");
    feat_cmd->add_option("--zero-threshold", f_zero, "fano zero threshold");
    feat_cmd->add_option("--asym-ratio", f_asym, "fano flank-height ratio");

    // fano-fit
    auto* fit_cmd =
        app.add_subcommand("fano-fit", "fit the Fano form to a spectrum CSV");
    std::string fit_csv, fit_window, fit_json;
    fit_cmd->add_option("--csv-in", fit_csv, "spectrum CSV")->required();
    fit_cmd->add_option("--window", fit_window,
                        "fit window lo:hi in delta/omega_m units");
    fit_cmd->add_option("--json", fit_json, "fit JSON path (default stdout)");

    // oracle-check
    auto* oc_cmd = app.add_subcommand(
        "oracle-check",
        "compare the frequency-domain solver against the time-domain oracle");
    CommonOpts oo;
    double oc_gamma = 0.01, oc_thresh = 1e-2;
    int oc_points = 21, oc_div = 100;
    std::string oc_range = "0.9:1.1", oc_json, oc_dump;
    add_common(oc_cmd, oo);
    oc_cmd->add_option("--oracle-gamma-m", oc_gamma,
                       "gamma_m override in cyclic MHz (both sides)");
    oc_cmd->add_option("--points", oc_points, "number of detunings");
    oc_cmd->add_option("--range", oc_range, "detuning range in omega_m units");
    oc_cmd->add_option("--threshold", oc_thresh, "max relative error to pass");
    oc_cmd->add_option("--dt-div", oc_div, "integrator steps per fastest period");
    oc_cmd->add_option("--json", oc_json, "comparison JSON path (default stdout)");
    oc_cmd->add_option("--dump-traj", oc_dump,
                       "dump the middle detuning's trajectory CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int r = app.exit(e);
        return r == 0 ? 0 : kExitConfig;  // bad usage is a config error
    }

    if (sweep_cmd->parsed()) return run_sweep(so, sweep_out, sweep_json, sweep_svg);
    if (feat_cmd->parsed())
        return run_features(fo, feat_csv, feat_json, f_dip, f_zero, f_asym);
    if (fit_cmd->parsed()) return run_fano_fit(fit_csv, fit_window, fit_json);
    if (oc_cmd->parsed())
        return run_oracle_check(oo, oc_gamma, oc_points, oc_range, oc_thresh,
                                oc_div, oc_json, oc_dump);
    return 0;
}
