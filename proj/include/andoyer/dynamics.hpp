#pragma once

#include <utility>
#include <vector>

#include "andoyer/body.hpp"
#include "andoyer/charts.hpp"

namespace andoyer {

// |L| >= SINGULAR_BAND * G aborts an integration; the chart degenerates there.
inline constexpr double SINGULAR_BAND = 0.999;

// Free-rotation Hamiltonian data: a general symmetric positive definite
// body-frame inertia tensor. Principal axes are not assumed.
struct HamiltonianSpec {
    InertiaTensor inertia;

    // Throws SingularInertia unless positive definite with condition
    // number <= 1e12.
    void validate() const;
};

struct TrajectorySample {
    double t = 0.0;
    AndoyerState state;
    Vec3 m_body;
    double energy = 0.0;
};

struct AndoyerTrajectory {
    std::vector<TrajectorySample> samples;
};

enum class IntegrationMethod { rk4, midpoint };

// H = (1/2) M . I^-1 M with M = momentum_vector_body(a). Depends only on
// (l, L, G); g, theta and Theta are cyclic.
double hamiltonian(const HamiltonianSpec& spec, const AndoyerState& a);

struct AndoyerStateRates {
    double l = 0.0, g = 0.0, theta = 0.0;
    double L = 0.0, G = 0.0, Theta = 0.0;
};

// Canonical equations, analytic partials:
//   ldot = dH/dL, Ldot = -dH/dl, gdot = dH/dG; Gdot = thetadot = Thetadot = 0.
AndoyerStateRates hamilton_rhs(const HamiltonianSpec& spec, const AndoyerState& a);

// Fixed-step integration of the free rotation. G, Theta and theta have zero
// rates and are copied, never integrated. Throws SingularBandReached with the
// partial trajectory attached when |L| enters the singular band.
struct SingularBand : SingularBandReached {
    AndoyerTrajectory partial;
    SingularBand(const std::string& what, AndoyerTrajectory partial_)
        : SingularBandReached(what), partial(std::move(partial_)) {}
};

AndoyerTrajectory integrate(const HamiltonianSpec& spec, const AndoyerState& a0, double t_end,
                            double dt, IntegrationMethod method = IntegrationMethod::rk4);

// Independent oracle: RK4 on the body-frame momentum equation
// Mdot = M x (I^-1 M). |M| drift is diagnostic, never renormalized.
std::vector<std::pair<double, Vec3>> euler_oracle(const HamiltonianSpec& spec, const Vec3& m0,
                                                  double t_end, double dt);

}  // namespace andoyer
