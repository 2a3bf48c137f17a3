#include "omitsim/spectrum.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <thread>

namespace omitsim {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Solver: return "solver";
        case Provenance::ClosedForm: return "closed-form";
        case Provenance::Oracle: return "oracle";
        case Provenance::ExternalFile: return "external-file";
    }
    return "unknown";
}

void Spectrum::validate() const {
    if (grid.size() < 3) throw EmptySpectrum("spectrum needs at least 3 points");
    if (absorption.size() != grid.size() || dispersion.size() != grid.size())
        throw NonPhysical("spectrum arrays must have equal length");
    const double h =
        (grid.back() - grid.front()) / static_cast<double>(grid.size() - 1);
    if (!(h > 0.0)) throw NonPhysical("grid must be strictly ascending");
    const double scale =
        std::max(std::abs(grid.front()), std::abs(grid.back()));
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1]))
            throw NonPhysical("grid must be strictly ascending");
        const double ideal = grid.front() + h * static_cast<double>(i);
        if (std::abs(grid[i] - ideal) > 1e-9 * scale)
            throw NonPhysical("grid must be uniform to 1e-9 relative");
    }
}

unsigned sweep_threads(unsigned cap) {
    unsigned n = cap;
    if (n == 0) {
        if (const char* env = std::getenv("OMIT_THREADS")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v > 0) n = static_cast<unsigned>(v);
        }
    }
    if (n == 0) n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    return n;
}

Spectrum sweep(const SystemParams& params, const DriveParams& drive,
               const GridSpec& grid, BranchPolicy policy,
               std::size_t branch_index, unsigned thread_cap) {
    grid.validate();
    const SteadyState ss = steady_state(params, drive, policy, branch_index);
    const double eps =
        drive.eps_p > 0.0
            ? drive.eps_p
            : 1e-3 * std::max(drive.omega_l_amp, params.kappa);

    Spectrum sp;
    sp.provenance = Provenance::Solver;
    sp.grid.resize(grid.count);
    sp.absorption.resize(grid.count);
    sp.dispersion.resize(grid.count);
    for (std::size_t i = 0; i < grid.count; ++i) sp.grid[i] = grid.point(i);

    const unsigned workers =
        std::min<std::size_t>(sweep_threads(thread_cap), grid.count);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_bad{grid.count};
    std::vector<std::string> errors(grid.count);

    auto body = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= grid.count) break;
            try {
                const ProbeResponse r =
                    harmonic_balance_solve(params, ss, sp.grid[i], eps);
                sp.absorption[i] = r.absorption;
                sp.dispersion[i] = r.dispersion;
            } catch (const SimError& e) {
                std::size_t cur = first_bad.load();
                while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {}
                errors[i] = e.what();
            }
        }
    };

    if (workers <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
        for (auto& th : pool) th.join();
    }

    const std::size_t bad = first_bad.load();
    if (bad < grid.count)
        throw SingularResponse("sweep failed at grid index " +
                                   std::to_string(bad) + ": " + errors[bad],
                               sp.grid[bad]);
    return sp;
}

}  // namespace omitsim
