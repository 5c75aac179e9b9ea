#pragma once

#include <stdexcept>
#include <string>

namespace andoyer {

// Node line undefined: |L| or |Theta| within threshold of G.
struct ChartSingular : std::runtime_error {
    explicit ChartSingular(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroMomentum : std::runtime_error {
    ZeroMomentum() : std::runtime_error("angular momentum vector is zero") {}
};

struct FixtureError : std::runtime_error {
    explicit FixtureError(const std::string& what) : std::runtime_error(what) {}
};

// Finite-difference result is noise-dominated at the requested step.
struct StepTooSmall : std::runtime_error {
    explicit StepTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct SingularInertia : std::runtime_error {
    explicit SingularInertia(const std::string& what) : std::runtime_error(what) {}
};

// Trajectory entered |L| >= 0.999 G; partial trajectory kept by the thrower.
struct SingularBandReached : std::runtime_error {
    explicit SingularBandReached(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidState : std::runtime_error {
    explicit InvalidState(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace andoyer
