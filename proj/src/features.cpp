#include "omitsim/features.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace omitsim {
namespace {

// Parabolic sub-grid refinement through (y[i-1], y[i], y[i+1]); returns the
// vertex as (location, value).
std::pair<double, double> refine3(const std::vector<double>& x,
                                  const std::vector<double>& y,
                                  std::size_t i) {
    const double denom = y[i - 1] - 2.0 * y[i] + y[i + 1];
    if (denom == 0.0) return {x[i], y[i]};
    const double d = (y[i - 1] - y[i + 1]) / (2.0 * denom);
    const double h = x[1] - x[0];
    return {x[i] + d * h, y[i] - (y[i - 1] - y[i + 1]) * d / 4.0};
}

// Half-width at half height above the local baseline, by linear
// interpolation of the crossings around sample index i.
double half_width_at(const std::vector<double>& x, const std::vector<double>& y,
                     std::size_t i, double height, double baseline) {
    const double level = 0.5 * (height + baseline);
    double left = x.front(), right = x.back();
    for (std::size_t k = i; k-- > 0;) {
        if (y[k] <= level) {
            const double f = (y[k + 1] - level) / (y[k + 1] - y[k]);
            left = x[k + 1] - f * (x[k + 1] - x[k]);
            break;
        }
    }
    for (std::size_t k = i + 1; k < y.size(); ++k) {
        if (y[k] <= level) {
            const double f = (y[k - 1] - level) / (y[k - 1] - y[k]);
            right = x[k - 1] + f * (x[k] - x[k - 1]);
            break;
        }
    }
    return 0.5 * (right - left);
}

}  // namespace

SpectralFeatures extract_features(const Spectrum& sp,
                                  const FeatureThresholds& thr) {
    if (sp.grid.size() < 3)
        throw EmptySpectrum("feature extraction needs at least 3 grid points");
    sp.validate();
    const auto& x = sp.grid;
    const auto& y = sp.absorption;
    const std::size_t n = x.size();

    SpectralFeatures out;
    std::vector<std::size_t> peak_idx;
    double ymin = *std::min_element(y.begin(), y.end());

    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (y[i] > y[i - 1] && y[i] > y[i + 1]) {
            auto [loc, val] = refine3(x, y, i);
            Peak p;
            p.location = loc;
            p.height = val;
            p.half_width = half_width_at(x, y, i, val, ymin);
            out.peaks.push_back(p);
            peak_idx.push_back(i);
        }
    }
    // boundary maxima, flagged, appended after the interior ones
    if (n >= 2 && y[0] > y[1])
        out.peaks.push_back({x[0], y[0], 0.0, true});
    if (n >= 2 && y[n - 1] > y[n - 2])
        out.peaks.push_back({x[n - 1], y[n - 1], 0.0, true});

    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (y[i] < y[i - 1] && y[i] < y[i + 1]) {
            auto [loc, val] = refine3(x, y, i);
            Dip d;
            d.location = loc;
            d.depth = val;
            for (std::size_t k = 0; k < peak_idx.size(); ++k) {
                if (peak_idx[k] < i) d.left_peak = static_cast<int>(k);
                if (peak_idx[k] > i) {
                    d.right_peak = static_cast<int>(k);
                    break;
                }
            }
            out.dips.push_back(d);
        }
    }

    for (std::size_t di = 0; di < out.dips.size(); ++di) {
        const Dip& d = out.dips[di];
        if (d.left_peak < 0 || d.right_peak < 0) continue;
        const double hl = out.peaks[d.left_peak].height;
        const double hr = out.peaks[d.right_peak].height;
        if (d.depth < thr.dip_fraction * 0.5 * (hl + hr)) {
            Window w;
            w.left_peak = d.left_peak;
            w.dip = static_cast<int>(di);
            w.right_peak = d.right_peak;
            w.width = out.peaks[d.right_peak].location -
                      out.peaks[d.left_peak].location;
            out.windows.push_back(w);
        }
        if (d.depth < thr.zero_threshold) {
            const double lo = std::min(hl, hr);
            const double ratio = lo > 0.0
                                     ? std::max(hl, hr) / lo
                                     : std::numeric_limits<double>::infinity();
            if (ratio > thr.asym_ratio)
                out.fano_zeros.push_back(
                    {d.location, d.depth, ratio, static_cast<int>(di)});
        }
    }
    return out;
}

}  // namespace omitsim
