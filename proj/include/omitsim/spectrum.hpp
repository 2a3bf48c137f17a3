#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "omitsim/response.hpp"

namespace omitsim {

enum class Provenance { Solver, ClosedForm, Oracle, ExternalFile };

std::string to_string(Provenance p);

// Uniform detuning grid, absolute rad/s.
struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    std::size_t count = 0;

    void validate() const {
        if (count < 3) throw NonPhysical("grid count must be at least 3");
        if (!(start < stop)) throw NonPhysical("grid start must precede stop");
    }
    double point(std::size_t i) const {
        return start + (stop - start) * static_cast<double>(i) /
                           static_cast<double>(count - 1);
    }
    double step() const {
        return (stop - start) / static_cast<double>(count - 1);
    }
};

// Absorption/dispersion quadratures of E_out on an ascending uniform grid.
struct Spectrum {
    std::vector<double> grid;
    std::vector<double> absorption;
    std::vector<double> dispersion;
    Provenance provenance = Provenance::Solver;

    void validate() const;
    double step() const { return grid.size() > 1 ? grid[1] - grid[0] : 0.0; }
};

// Number of worker threads for sweeps: explicit cap, else OMIT_THREADS, else
// hardware concurrency.
unsigned sweep_threads(unsigned cap = 0);

// Evaluate the probe response on the grid. Deterministic: results are
// assembled by grid index, so the output is identical for any thread count.
// Solver errors are rethrown annotated with the offending grid index.
Spectrum sweep(const SystemParams& params, const DriveParams& drive,
               const GridSpec& grid, BranchPolicy policy = BranchPolicy::Lowest,
               std::size_t branch_index = 0, unsigned thread_cap = 0);

}  // namespace omitsim
