#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "omitsim/features.hpp"
#include "omitsim/presets.hpp"
#include "omitsim/steady_state.hpp"

namespace omitsim {

// Config-file / CLI parse failure; message carries line and field.
struct ConfigError : SimError {
    using SimError::SimError;
};

// Fully resolved run description. Frequencies enter as cyclic MHz through the
// config layer and are stored in rad/s here.
struct RunConfig {
    SystemParams sys;
    DriveParams drive;
    double grid_start = 0.5;  // omega_m units
    double grid_stop = 1.5;
    std::size_t grid_count = 2001;
    FeatureThresholds thresholds;
    BranchPolicy branch = BranchPolicy::Lowest;
    std::size_t branch_index = 0;

    GridSpec grid() const {
        return {grid_start * sys.omega_m, grid_stop * sys.omega_m, grid_count};
    }
    // Probe defaults to 1e-3 of the pump (or of kappa when undriven).
    double eps_p_effective() const {
        return drive.eps_p > 0.0
                   ? drive.eps_p
                   : 1e-3 * std::max(drive.omega_l_amp, sys.kappa);
    }
    void validate() const;
};

RunConfig config_from_preset(const Preset& preset);

// Flat key = value text, '#' comments. Frequencies in cyclic MHz,
// dimensionless quantities bare. Unknown keys and bad values raise
// ConfigError with the line number. `base` supplies defaults (a preset or a
// previous config).
RunConfig parse_config_text(const std::string& text,
                            const std::optional<RunConfig>& base = std::nullopt);
RunConfig load_config_file(const std::string& path,
                           const std::optional<RunConfig>& base = std::nullopt);

}  // namespace omitsim
