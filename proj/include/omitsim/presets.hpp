#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omitsim/params.hpp"

namespace omitsim {

// Figure preset: system/drive parameters plus the default sweep window in
// units of omega_m.
struct Preset {
    std::string name;
    SystemParams sys;
    double omega_l_mhz = 0.0;   // pump amplitude, cyclic MHz
    double grid_start = 0.5;    // in omega_m units
    double grid_stop = 1.5;
    std::size_t grid_count = 2001;
    std::string note;

    DriveParams drive(double eps_frac = 1e-3) const {
        DriveParams d;
        d.omega_l_amp = mhz_to_rads(omega_l_mhz);
        d.eps_p = eps_frac * std::max(d.omega_l_amp, sys.kappa);
        return d;
    }
};

const std::vector<Preset>& preset_catalog();
std::optional<Preset> find_preset(const std::string& name);

}  // namespace omitsim
