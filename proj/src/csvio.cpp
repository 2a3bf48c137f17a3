#include "omitsim/csvio.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

namespace omitsim {

namespace {

constexpr const char* kHeader = "delta,delta_over_omega_m,re_eout,im_eout";

void fmt9(char* buf, std::size_t n, double v) {
    std::snprintf(buf, n, "%.8e", v);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SimError("cannot open for writing: " + path);
    out << content;
    if (!out) throw SimError("write failed: " + path);
}

}  // namespace

double csv_quantize(double v) {
    char buf[40];
    fmt9(buf, sizeof buf, v);
    return std::strtod(buf, nullptr);
}

std::string spectrum_to_csv(const Spectrum& sp, double omega_m) {
    std::string out;
    out.reserve(sp.grid.size() * 64 + 64);
    out += kHeader;
    out += '\n';
    char b[4][40];
    for (std::size_t i = 0; i < sp.grid.size(); ++i) {
        fmt9(b[0], sizeof b[0], sp.grid[i]);
        fmt9(b[1], sizeof b[1], sp.grid[i] / omega_m);
        fmt9(b[2], sizeof b[2], sp.absorption[i]);
        fmt9(b[3], sizeof b[3], sp.dispersion[i]);
        out += b[0]; out += ',';
        out += b[1]; out += ',';
        out += b[2]; out += ',';
        out += b[3]; out += '\n';
    }
    return out;
}

void write_spectrum_csv(const std::string& path, const Spectrum& sp,
                        double omega_m) {
    write_file(path, spectrum_to_csv(sp, omega_m));
}

CsvSpectrum read_spectrum_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedCsv("cannot open CSV: " + path);
    std::string line;
    if (!std::getline(in, line)) throw MalformedCsv("empty CSV: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kHeader)
        throw MalformedCsv("bad CSV header (expected '" + std::string(kHeader) +
                           "'): " + path);
    CsvSpectrum out;
    out.spectrum.provenance = Provenance::ExternalFile;
    int lineno = 1;
    double om_sum = 0.0;
    std::size_t om_n = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        double v[4];
        const char* p = line.c_str();
        for (int k = 0; k < 4; ++k) {
            char* end = nullptr;
            v[k] = std::strtod(p, &end);
            if (end == p)
                throw MalformedCsv("line " + std::to_string(lineno) +
                                   ": expected number");
            p = end;
            if (k < 3) {
                if (*p != ',')
                    throw MalformedCsv("line " + std::to_string(lineno) +
                                       ": expected 4 comma-separated values");
                ++p;
            }
        }
        if (*p != '\0')
            throw MalformedCsv("line " + std::to_string(lineno) +
                               ": trailing characters");
        out.spectrum.grid.push_back(v[0]);
        out.spectrum.absorption.push_back(v[2]);
        out.spectrum.dispersion.push_back(v[3]);
        if (v[1] != 0.0) {
            om_sum += v[0] / v[1];
            ++om_n;
        }
    }
    if (out.spectrum.grid.size() < 3)
        throw MalformedCsv("CSV has fewer than 3 data rows: " + path);
    try {
        out.spectrum.validate();
    } catch (const SimError& e) {
        throw MalformedCsv(std::string("bad spectrum grid: ") + e.what());
    }
    out.omega_m = om_n > 0 ? om_sum / static_cast<double>(om_n) : 0.0;
    return out;
}

Spectrum quantize_like_csv(const Spectrum& sp) {
    Spectrum q = sp;
    for (auto& v : q.grid) v = csv_quantize(v);
    for (auto& v : q.absorption) v = csv_quantize(v);
    for (auto& v : q.dispersion) v = csv_quantize(v);
    return q;
}

void write_trajectory_csv(const std::string& path,
                          const oracle::Trajectory& traj) {
    std::string out = "t,re_c,im_c,q,p,re_sm,im_sm\n";
    char b[7][40];
    for (std::size_t i = 0; i < traj.t.size(); ++i) {
        fmt9(b[0], sizeof b[0], traj.t[i]);
        fmt9(b[1], sizeof b[1], traj.c[i].real());
        fmt9(b[2], sizeof b[2], traj.c[i].imag());
        fmt9(b[3], sizeof b[3], traj.q[i]);
        fmt9(b[4], sizeof b[4], traj.p[i]);
        fmt9(b[5], sizeof b[5], traj.sm[i].real());
        fmt9(b[6], sizeof b[6], traj.sm[i].imag());
        for (int k = 0; k < 7; ++k) {
            out += b[k];
            out += (k == 6 ? '\n' : ',');
        }
    }
    write_file(path, out);
}

}  // namespace omitsim
