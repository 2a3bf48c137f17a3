#pragma once

#include <string>

#include "omitsim/oracle.hpp"
#include "omitsim/spectrum.hpp"

namespace omitsim {

// Spectrum CSV, bit-exact format: header
//   delta,delta_over_omega_m,re_eout,im_eout
// then one row per grid point, scientific notation with 9 significant
// digits, LF line endings, no trailing separator. delta in rad/s.
std::string spectrum_to_csv(const Spectrum& spectrum, double omega_m);
void write_spectrum_csv(const std::string& path, const Spectrum& spectrum,
                        double omega_m);

// Parse a spectrum CSV; returns the spectrum (provenance external-file) and
// the omega_m recovered from the delta / delta_over_omega_m columns. Throws
// MalformedCsv on any structural problem.
struct CsvSpectrum {
    Spectrum spectrum;
    double omega_m = 0.0;
};
CsvSpectrum read_spectrum_csv(const std::string& path);

// Round a double through the CSV's 9-significant-digit representation.
double csv_quantize(double v);
// Spectrum with every value replaced by its CSV representation, so feature
// extraction agrees bitwise between the in-memory and re-ingested paths.
Spectrum quantize_like_csv(const Spectrum& spectrum);

// Trajectory dump for debugging: t,re_c,im_c,q,p,re_sm,im_sm.
void write_trajectory_csv(const std::string& path,
                          const oracle::Trajectory& traj);

}  // namespace omitsim
