#pragma once

#include <vector>

#include "omitsim/spectrum.hpp"

namespace omitsim {

// Local absorption maximum, location refined through the parabola over the
// 3-point stencil. Endpoint maxima are reported with boundary = true and are
// never used as dip flanks.
struct Peak {
    double location = 0.0;
    double height = 0.0;
    double half_width = 0.0;
    bool boundary = false;
};

// Local absorption minimum. depth is the absorption value at the refined
// minimum (the residual absorption the window bottoms out at); flank indices
// point into peaks, -1 when no interior peak exists on that side.
struct Dip {
    double location = 0.0;
    double depth = 0.0;
    int left_peak = -1;
    int right_peak = -1;
};

// Transparency window: a qualifying dip with both flanking peaks.
struct Window {
    int left_peak = 0;
    int dip = 0;
    int right_peak = 0;
    double width = 0.0;  // flanking-peak separation
};

// Near-zero absorption minimum with strongly unequal flanking-peak heights.
struct FanoZero {
    double location = 0.0;
    double value = 0.0;
    double flank_ratio = 0.0;
    int dip = 0;
};

struct FeatureThresholds {
    // dip qualifies as transparency when its residual absorption is below
    // dip_fraction times the mean flanking-peak height
    double dip_fraction = 0.10;
    // fano zero: residual absorption below zero_threshold (absorption units
    // where the bare-cavity maximum is 2) ...
    double zero_threshold = 0.02;
    // ... with flanking-peak height ratio (larger/smaller) above asym_ratio
    double asym_ratio = 2.0;
};

struct SpectralFeatures {
    std::vector<Peak> peaks;  // interior peaks first, then boundary ones
    std::vector<Dip> dips;
    std::vector<Window> windows;
    std::vector<FanoZero> fano_zeros;

    std::size_t interior_peak_count() const {
        std::size_t n = 0;
        for (const auto& p : peaks)
            if (!p.boundary) ++n;
        return n;
    }
};

SpectralFeatures extract_features(const Spectrum& spectrum,
                                  const FeatureThresholds& thresholds = {});

}  // namespace omitsim
