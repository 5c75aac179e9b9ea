#include "andoyer/body.hpp"

#include <cmath>

#include "andoyer/random.hpp"

namespace andoyer {

void PointMassBody::validate() const {
    if (entries.empty()) throw InvalidState("body needs at least one point mass");
    for (const auto& e : entries) {
        if (!(e.mass > 0.0) || !std::isfinite(e.mass) || !e.position.finite()) {
            throw InvalidState("body entries need positive finite mass and finite position");
        }
    }
}

bool PointMassBody::nondegenerate() const {
    const auto ev = sym_eigenvalues(inertia_tensor(*this).m);
    return ev[0] > 1e-12 * std::max(ev[2], 1e-300);
}

void InertiaTensor::validate() const {
    const double scale = std::max(m.max_abs(), 1e-300);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::abs(m(i, j) - m(j, i)) > 1e-12 * scale)
                throw InvalidState("inertia tensor not symmetric");
    const auto ev = sym_eigenvalues(m);
    // Point-mass inertias always satisfy I1 + I2 >= I3 cyclically.
    if (ev[0] + ev[1] < ev[2] - 1e-9 * ev[2]) {
        throw InvalidState("inertia eigenvalues violate triangle inequality");
    }
}

std::vector<Vec3> positions_abs(const PointMassBody& body, const Rot3& attitude) {
    std::vector<Vec3> r;
    r.reserve(body.entries.size());
    for (const auto& e : body.entries) r.push_back(attitude.apply_inverse(e.position));
    return r;
}

std::vector<Vec3> velocities(const PointMassBody& body, const Rot3& attitude,
                             const Vec3& omega_abs) {
    std::vector<Vec3> v;
    v.reserve(body.entries.size());
    for (const auto& r : positions_abs(body, attitude)) v.push_back(cross(omega_abs, r));
    return v;
}

Vec3 angular_momentum(const PointMassBody& body, const Rot3& attitude, const Vec3& omega_abs) {
    Vec3 g;
    const auto r = positions_abs(body, attitude);
    for (std::size_t i = 0; i < r.size(); ++i) {
        g += body.entries[i].mass * cross(r[i], cross(omega_abs, r[i]));
    }
    return g;
}

double kinetic_energy(const PointMassBody& body, const Rot3& attitude, const Vec3& omega_abs) {
    double t = 0.0;
    const auto v = velocities(body, attitude, omega_abs);
    for (std::size_t i = 0; i < v.size(); ++i) t += 0.5 * body.entries[i].mass * v[i].norm2();
    return t;
}

InertiaTensor inertia_tensor(const PointMassBody& body) {
    body.validate();
    Mat3 s = Mat3::zero();
    for (const auto& e : body.entries) {
        const Vec3& b = e.position;
        const double r2 = b.norm2();
        const double bb[3] = {b.x, b.y, b.z};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                s(i, j) += e.mass * ((i == j ? r2 : 0.0) - bb[i] * bb[j]);
    }
    return InertiaTensor{s};
}

Mat3 euler_mass_matrix(const PointMassBody& body, const EulerAngles& q) {
    const Mat3 b = euler_kinematic_matrix(q);
    return b.transpose() * inertia_tensor(body).m * b;
}

EulerMomenta euler_momenta(const PointMassBody& body, const EulerAngles& q,
                           const EulerRates& qdot) {
    const Vec3 p = euler_mass_matrix(body, q) * Vec3{qdot.phi, qdot.theta, qdot.psi};
    return {p.x, p.y, p.z};
}

PointMassBody random_body(std::uint64_t seed, int n, double scale) {
    if (n < 4) throw InvalidState("random_body needs n >= 4");
    Rng rng(Rng::stream_seed(seed, 0xB0D7));
    for (int attempt = 0; attempt < 100; ++attempt) {
        PointMassBody body;
        body.entries.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const double m = rng.uniform(0.5, 2.0);
            Vec3 pos;
            do {
                pos = {rng.uniform(-scale, scale), rng.uniform(-scale, scale),
                       rng.uniform(-scale, scale)};
            } while (pos.norm() > scale);
            body.entries.push_back({m, pos});
        }
        const auto ev = sym_eigenvalues(inertia_tensor(body).m);
        if (ev[0] >= 0.05 * ev[2]) return body;
    }
    throw FixtureError("random_body: 100 resamples without a well-conditioned inertia");
}

}  // namespace andoyer
