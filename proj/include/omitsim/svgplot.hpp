#pragma once

#include <string>

#include "omitsim/spectrum.hpp"

namespace omitsim {

// Self-contained SVG line plot of absorption (solid) and dispersion (dashed)
// against delta/omega_m.
std::string spectrum_to_svg(const Spectrum& spectrum, double omega_m,
                            const std::string& title = "");
void write_spectrum_svg(const std::string& path, const Spectrum& spectrum,
                        double omega_m, const std::string& title = "");

}  // namespace omitsim
