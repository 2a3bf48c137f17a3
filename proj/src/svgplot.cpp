#include "omitsim/svgplot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace omitsim {

namespace {

constexpr double kW = 900, kH = 560;
constexpr double kL = 80, kR = 30, kT = 48, kB = 60;

std::string num(double v) {
    char b[32];
    std::snprintf(b, sizeof b, "%.6g", v);
    return b;
}

// round limits outward to a tidy tick step
void nice_axis(double lo, double hi, double& tick, double& alo, double& ahi) {
    const double span = hi - lo;
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double r = raw / mag;
    tick = (r < 1.5 ? 1.0 : r < 3.5 ? 2.0 : r < 7.5 ? 5.0 : 10.0) * mag;
    alo = std::floor(lo / tick) * tick;
    ahi = std::ceil(hi / tick) * tick;
}

}  // namespace

std::string spectrum_to_svg(const Spectrum& sp, double omega_m,
                            const std::string& title) {
    sp.validate();
    const double xlo = sp.grid.front() / omega_m;
    const double xhi = sp.grid.back() / omega_m;
    double ylo = sp.absorption[0], yhi = ylo;
    for (double v : sp.absorption) { ylo = std::min(ylo, v); yhi = std::max(yhi, v); }
    for (double v : sp.dispersion) { ylo = std::min(ylo, v); yhi = std::max(yhi, v); }
    if (yhi == ylo) { yhi += 1.0; ylo -= 1.0; }
    double xt, xa, xb, yt, ya, yb;
    nice_axis(xlo, xhi, xt, xa, xb);
    nice_axis(ylo, yhi, yt, ya, yb);

    auto X = [&](double x) { return kL + (x - xa) / (xb - xa) * (kW - kL - kR); };
    auto Y = [&](double y) { return kH - kB - (y - ya) / (yb - ya) * (kH - kT - kB); };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW
      << "\" height=\"" << kH << "\" viewBox=\"0 0 " << kW << " " << kH
      << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty())
        s << "<text x=\"" << kW / 2 << "\" y=\"26\" text-anchor=\"middle\" "
          << "font-family=\"sans-serif\" font-size=\"16\">" << title
          << "</text>\n";

    // grid lines and tick labels
    s << "<g stroke=\"#dddddd\" stroke-width=\"1\" font-family=\"sans-serif\""
      << " font-size=\"12\" fill=\"black\">\n";
    for (double x = xa; x <= xb + 0.5 * xt; x += xt) {
        s << "<line x1=\"" << X(x) << "\" y1=\"" << Y(ya) << "\" x2=\"" << X(x)
          << "\" y2=\"" << Y(yb) << "\"/>\n"
          << "<text x=\"" << X(x) << "\" y=\"" << kH - kB + 20
          << "\" text-anchor=\"middle\" stroke=\"none\">" << num(x)
          << "</text>\n";
    }
    for (double y = ya; y <= yb + 0.5 * yt; y += yt) {
        s << "<line x1=\"" << X(xa) << "\" y1=\"" << Y(y) << "\" x2=\"" << X(xb)
          << "\" y2=\"" << Y(y) << "\"/>\n"
          << "<text x=\"" << kL - 8 << "\" y=\"" << Y(y) + 4
          << "\" text-anchor=\"end\" stroke=\"none\">" << num(y)
          << "</text>\n";
    }
    s << "</g>\n";

    auto polyline = [&](const std::vector<double>& ys, const char* style) {
        s << "<polyline fill=\"none\" " << style << " points=\"";
        for (std::size_t i = 0; i < sp.grid.size(); ++i) {
            s << num(X(sp.grid[i] / omega_m)) << ',' << num(Y(ys[i]));
            if (i + 1 < sp.grid.size()) s << ' ';
        }
        s << "\"/>\n";
    };
    polyline(sp.absorption, "stroke=\"#1f4e9c\" stroke-width=\"1.6\"");
    polyline(sp.dispersion,
             "stroke=\"#888888\" stroke-width=\"1.4\" stroke-dasharray=\"6,4\"");

    // axes box and labels
    s << "<rect x=\"" << kL << "\" y=\"" << kT << "\" width=\"" << kW - kL - kR
      << "\" height=\"" << kH - kT - kB
      << "\" fill=\"none\" stroke=\"black\"/>\n"
      << "<text x=\"" << kW / 2 << "\" y=\"" << kH - 16
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"14\">delta / omega_m</text>\n"
      << "<text x=\"20\" y=\"" << kH / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"14\" transform=\"rotate(-90 20 "
      << kH / 2 << ")\">E_out quadratures</text>\n"
      << "<g font-family=\"sans-serif\" font-size=\"13\">\n"
      << "<line x1=\"" << kW - 260 << "\" y1=\"" << kT + 16 << "\" x2=\""
      << kW - 220 << "\" y2=\"" << kT + 16
      << "\" stroke=\"#1f4e9c\" stroke-width=\"1.6\"/>\n"
      << "<text x=\"" << kW - 212 << "\" y=\"" << kT + 20
      << "\">absorption</text>\n"
      << "<line x1=\"" << kW - 260 << "\" y1=\"" << kT + 36 << "\" x2=\""
      << kW - 220 << "\" y2=\"" << kT + 36
      << "\" stroke=\"#888888\" stroke-width=\"1.4\" "
         "stroke-dasharray=\"6,4\"/>\n"
      << "<text x=\"" << kW - 212 << "\" y=\"" << kT + 40
      << "\">dispersion</text>\n</g>\n</svg>\n";
    return s.str();
}

void write_spectrum_svg(const std::string& path, const Spectrum& sp,
                        double omega_m, const std::string& title) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SimError("cannot open for writing: " + path);
    out << spectrum_to_svg(sp, omega_m, title);
}

}  // namespace omitsim
