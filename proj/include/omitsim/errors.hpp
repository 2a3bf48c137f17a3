#pragma once

#include <stdexcept>
#include <string>

namespace omitsim {

// Base class for all domain errors thrown by the library.
struct SimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter set or derived quantity is outside the physical domain
// (negative rates, non-positive effective cavity decay, algebra bugs).
struct NonPhysical : SimError {
    using SimError::SimError;
};

// Requested steady-state branch index exceeds the root count.
struct BranchOutOfRange : SimError {
    using SimError::SimError;
};

// The sideband linear system is singular to working precision at this
// detuning (an undamped polariton resonance).
struct SingularResponse : SimError {
    double delta;
    SingularResponse(const std::string& msg, double delta_)
        : SimError(msg), delta(delta_) {}
};

// A closed form restricted to g_ac = 0 was called with atom coupling on.
struct AtomCouplingPresent : SimError {
    using SimError::SimError;
};

// A Fano channel was requested with its generating coupling switched off.
struct ZeroCoupling : SimError {
    using SimError::SimError;
};

// Feature extraction on an empty or too-short spectrum.
struct EmptySpectrum : SimError {
    using SimError::SimError;
};

// Spectrum CSV could not be parsed.
struct MalformedCsv : SimError {
    using SimError::SimError;
};

// Time-domain integration blew up (unstable parameters).
struct Divergence : SimError {
    double time;
    Divergence(const std::string& msg, double time_)
        : SimError(msg), time(time_) {}
};

// Trajectory tail is not stationary enough for harmonic projection.
struct NotSettled : SimError {
    using SimError::SimError;
};

}  // namespace omitsim
