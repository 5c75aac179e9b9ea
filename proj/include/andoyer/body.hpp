#pragma once

#include <cstdint>
#include <vector>

#include "andoyer/charts.hpp"
#include "andoyer/geometry.hpp"

namespace andoyer {

struct PointMass {
    double mass = 0.0;
    Vec3 position;  // body frame
};

// A rigid body as a finite list of material points with body-frame positions.
// Every momentum and energy below is the explicit sum over these points.
struct PointMassBody {
    std::vector<PointMass> entries;

    // Throws InvalidState on empty body or non-positive mass.
    void validate() const;

    // True when the inertia tensor is positive definite. Required by the
    // dynamics layer, not by the canonicity checks.
    bool nondegenerate() const;
};

// Body-frame inertia tensor, symmetric, mass*length^2.
struct InertiaTensor {
    Mat3 m;

    // Symmetry within 1e-12 of scale and eigenvalue triangle inequalities
    // I1 + I2 >= I3 (cyclic) within 1e-9 relative.
    void validate() const;
};

// Absolute positions r_i = A^T b_i for a passive attitude A.
std::vector<Vec3> positions_abs(const PointMassBody& body, const Rot3& attitude);

// Rigid-motion velocities rdot_i = omega_abs x r_i.
std::vector<Vec3> velocities(const PointMassBody& body, const Rot3& attitude,
                             const Vec3& omega_abs);

// Sum m_i (r_i x rdot_i), absolute frame.
Vec3 angular_momentum(const PointMassBody& body, const Rot3& attitude, const Vec3& omega_abs);

// (1/2) Sum m_i |rdot_i|^2.
double kinetic_energy(const PointMassBody& body, const Rot3& attitude, const Vec3& omega_abs);

// Sum m_i (|b_i|^2 Id - b_i b_i^T), body frame.
InertiaTensor inertia_tensor(const PointMassBody& body);

// Euler mass matrix M(q) = B(q)^T I B(q).
Mat3 euler_mass_matrix(const PointMassBody& body, const EulerAngles& q);

// Conjugate momenta p = M(q) qdot of the 3-1-3 Euler chart.
EulerMomenta euler_momenta(const PointMassBody& body, const EulerAngles& q,
                           const EulerRates& qdot);

// Deterministic fixture generator: n >= 4 masses in [0.5, 2.0], positions in
// a ball of radius `scale`, resampled until the smallest inertia eigenvalue
// is >= 0.05 times the largest. Throws FixtureError after 100 resamples.
PointMassBody random_body(std::uint64_t seed, int n, double scale);

}  // namespace andoyer
