#include "omitsim/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace omitsim {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_number(const std::string& v, int line, const std::string& key) {
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        throw ConfigError("line " + std::to_string(line) +
                          ": invalid numeric value for '" + key + "': " + v);
    return x;
}

}  // namespace

void RunConfig::validate() const {
    try {
        sys.validate();
        drive.validate();
    } catch (const NonPhysical& e) {
        throw ConfigError(std::string("invalid parameters: ") + e.what());
    }
    if (grid_count < 3) throw ConfigError("grid_count must be at least 3");
    if (!(grid_start < grid_stop))
        throw ConfigError("grid_start must be below grid_stop");
    if (!(thresholds.dip_fraction > 0.0))
        throw ConfigError("dip_fraction must be positive");
    if (!(thresholds.asym_ratio >= 1.0))
        throw ConfigError("asym_ratio must be at least 1");
}

RunConfig config_from_preset(const Preset& preset) {
    RunConfig c;
    c.sys = preset.sys;
    c.drive.omega_l_amp = mhz_to_rads(preset.omega_l_mhz);
    c.drive.eps_p = 0.0;  // resolved by eps_p_effective()
    c.grid_start = preset.grid_start;
    c.grid_stop = preset.grid_stop;
    c.grid_count = preset.grid_count;
    return c;
}

RunConfig parse_config_text(const std::string& text,
                            const std::optional<RunConfig>& base) {
    RunConfig c = base.value_or(RunConfig{});
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string s = trim(raw);
        if (s.empty()) continue;
        const std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line) +
                              ": expected 'key = value', got: " + s);
        const std::string key = trim(s.substr(0, eq));
        const std::string val = trim(s.substr(eq + 1));
        if (key.empty() || val.empty())
            throw ConfigError("line " + std::to_string(line) +
                              ": empty key or value");

        auto num = [&]() { return parse_number(val, line, key); };
        if (key == "omega_m") c.sys.omega_m = mhz_to_rads(num());
        else if (key == "kappa") c.sys.kappa = mhz_to_rads(num());
        else if (key == "gamma_m") c.sys.gamma_m = mhz_to_rads(num());
        else if (key == "gamma_a") c.sys.gamma_a = mhz_to_rads(num());
        else if (key == "delta_c") c.sys.delta_c = mhz_to_rads(num());
        else if (key == "delta_a") c.sys.delta_a = mhz_to_rads(num());
        else if (key == "g_mc") c.sys.g_mc = mhz_to_rads(num());
        else if (key == "g_ac") c.sys.g_ac = mhz_to_rads(num());
        else if (key == "sigma_z") c.sys.sigma_z_ss = num();
        else if (key == "omega_l") c.drive.omega_l_amp = mhz_to_rads(num());
        else if (key == "eps_p") c.drive.eps_p = mhz_to_rads(num());
        else if (key == "grid_start") c.grid_start = num();
        else if (key == "grid_stop") c.grid_stop = num();
        else if (key == "grid_count") {
            const double x = num();
            if (x < 1.0 || x != std::floor(x))
                throw ConfigError("line " + std::to_string(line) +
                                  ": grid_count must be a positive integer");
            c.grid_count = static_cast<std::size_t>(x);
        }
        else if (key == "dip_fraction") c.thresholds.dip_fraction = num();
        else if (key == "zero_threshold") c.thresholds.zero_threshold = num();
        else if (key == "asym_ratio") c.thresholds.asym_ratio = num();
        else if (key == "branch") {
            if (val == "lowest") c.branch = BranchPolicy::Lowest;
            else if (val == "highest") c.branch = BranchPolicy::Highest;
            else {
                char* end = nullptr;
                const long k = std::strtol(val.c_str(), &end, 10);
                if (end == val.c_str() || *end != '\0' || k < 0)
                    throw ConfigError("line " + std::to_string(line) +
                                      ": branch must be lowest, highest, or a "
                                      "non-negative index");
                c.branch = BranchPolicy::Index;
                c.branch_index = static_cast<std::size_t>(k);
            }
        }
        else
            throw ConfigError("line " + std::to_string(line) +
                              ": unknown key '" + key + "'");
    }
    c.validate();
    return c;
}

RunConfig load_config_file(const std::string& path,
                           const std::optional<RunConfig>& base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), base);
}

}  // namespace omitsim
