#include "omitsim/presets.hpp"

namespace omitsim {

namespace {

SystemParams sys_mhz(double om, double kappa, double gm, double ga, double dc,
                     double da, double gmc, double gac) {
    SystemParams s;
    s.omega_m = mhz_to_rads(om);
    s.kappa = mhz_to_rads(kappa);
    s.gamma_m = mhz_to_rads(gm);
    s.gamma_a = mhz_to_rads(ga);
    s.delta_c = mhz_to_rads(dc);
    s.delta_a = mhz_to_rads(da);
    s.g_mc = mhz_to_rads(gmc);
    s.g_ac = mhz_to_rads(gac);
    s.sigma_z_ss = 1.0;
    return s;
}

Preset make(std::string name, SystemParams sys, double ol, double lo,
            double hi, std::string note) {
    Preset p;
    p.name = std::move(name);
    p.sys = sys;
    p.omega_l_mhz = ol;
    p.grid_start = lo;
    p.grid_stop = hi;
    p.note = std::move(note);
    return p;
}

std::vector<Preset> build_catalog() {
    std::vector<Preset> v;
    //                       om   kappa  gm     ga    dc   da  gmc gac
    v.push_back(make("fig2", sys_mhz(100, 4, 1e-3, 0.01, 100, 30, 2, 0), 10,
                     0.5, 1.5, "single transparency window"));
    v.push_back(make("fig2-text",
                     sys_mhz(100, 4, 1e-3, 0.01, 100, 30, 2, 0), 20, 0.5, 1.5,
                     "single window, stronger pump"));
    v.push_back(make("fig3", sys_mhz(100, 4, 1e-3, 0.01, 100, 40, 2, 10), 20,
                     0.5, 1.5, "both couplings on"));
    v.push_back(make("fig4a", sys_mhz(100, 4, 1e-3, 0.01, 80, 30, 2, 0), 20,
                     0.5, 1.5, "mechanical Fano, g_mc = 2 MHz"));
    v.push_back(make("fig4b", sys_mhz(100, 4, 1e-3, 0.01, 80, 30, 4, 0), 20,
                     0.5, 1.5, "mechanical Fano, g_mc = 4 MHz"));
    v.push_back(make("fig5a", sys_mhz(10, 4, 1e-3, 0.01, 15, 15, 0, 2), 2,
                     0.5, 1.75, "atomic channel, matched detunings"));
    v.push_back(make("fig5b", sys_mhz(10, 4, 1e-3, 0.01, 12, 10, 0, 2), 2,
                     0.5, 1.75, "atomic Fano, detuning variant"));
    v.push_back(make("fig5c", sys_mhz(10, 4, 1e-3, 0.01, 15, 12, 0, 2), 2,
                     0.5, 1.75, "atomic Fano, detuning variant"));
    v.push_back(make("fig6a", sys_mhz(20, 4, 1e-3, 0.01, 25, 10, 0.5, 2), 2,
                     0.25, 1.6, "double Fano, g_mc = 0.5 MHz"));
    v.push_back(make("fig6b", sys_mhz(20, 4, 1e-3, 0.01, 15, 10, 1, 2), 2,
                     0.25, 1.6, "double Fano, g_mc = 1 MHz"));
    v.push_back(make("fig7a", sys_mhz(10, 4, 1e-3, 0.01, 15, 15, 0.5, 1), 10,
                     0.5, 1.75, "double Fano, g_ac = 1 MHz"));
    v.push_back(make("fig7b", sys_mhz(10, 4, 1e-3, 0.01, 15, 15, 0.5, 1.5), 10,
                     0.5, 1.75, "double Fano, g_ac = 1.5 MHz"));
    v.push_back(make("fig7c", sys_mhz(10, 4, 1e-3, 0.01, 15, 15, 0.5, 2), 10,
                     0.5, 1.75, "double Fano, g_ac = 2 MHz"));
    v.push_back(make("bare", sys_mhz(100, 4, 1e-3, 0.01, 100, 30, 0, 0), 10,
                     0.5, 1.5, "both couplings off: bare cavity"));
    return v;
}

}  // namespace

const std::vector<Preset>& preset_catalog() {
    static const std::vector<Preset> catalog = build_catalog();
    return catalog;
}

std::optional<Preset> find_preset(const std::string& name) {
    for (const auto& p : preset_catalog())
        if (p.name == name) return p;
    return std::nullopt;
}

}  // namespace omitsim
