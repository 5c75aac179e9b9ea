#include <doctest.h>

#include <cmath>

#include "andoyer/body.hpp"
#include "andoyer/random.hpp"

using namespace andoyer;

namespace {

Vec3 random_vec(Rng& rng, double scale = 1.0) {
    return {rng.uniform(-scale, scale), rng.uniform(-scale, scale), rng.uniform(-scale, scale)};
}

PointMassBody single_mass(double m, const Vec3& b) { return {{{m, b}}}; }

EulerAngles random_euler(Rng& rng) {
    return {rng.uniform(0.0, TWO_PI), rng.uniform(0.3, M_PI - 0.3), rng.uniform(0.0, TWO_PI)};
}

// Kinetic energy as a function of the Euler velocities, for the FD oracle.
double energy_of_rates(const PointMassBody& body, const EulerAngles& q, const EulerRates& qd) {
    const Rot3 a = euler_attitude(q);
    const Vec3 omega_abs = a.apply_inverse(euler_kinematics(q, qd));
    return kinetic_energy(body, a, omega_abs);
}

}  // namespace

TEST_CASE("positions_abs") {
    const PointMassBody body = single_mass(1.0, {1, 0, 0});
    CHECK((positions_abs(body, Rot3::identity())[0] - Vec3{1, 0, 0}).norm() == 0.0);

    const Vec3 r = positions_abs(body, elem_rot(3, M_PI / 2.0))[0];
    CHECK((r - Vec3{0, 1, 0}).norm() < 1e-15);

    Rng rng(31);
    const PointMassBody rand_body = random_body(5, 6, 1.3);
    for (int i = 0; i < 20; ++i) {
        const Rot3 a = rot_about_axis(normalized(random_vec(rng) + Vec3{0.2, 0, 0}),
                                      rng.uniform(-6, 6));
        const auto rs = positions_abs(rand_body, a);
        for (std::size_t k = 0; k < rs.size(); ++k) {
            CHECK(rs[k].norm() == doctest::Approx(rand_body.entries[k].position.norm()));
        }
    }
}

TEST_CASE("velocities") {
    const PointMassBody body = single_mass(1.0, {1, 0, 0});
    CHECK(velocities(body, Rot3::identity(), {0, 0, 0})[0].norm() == 0.0);
    CHECK((velocities(body, Rot3::identity(), {0, 0, 1})[0] - Vec3{0, 1, 0}).norm() == 0.0);

    Rng rng(32);
    const PointMassBody rand_body = random_body(7, 5, 1.0);
    for (int i = 0; i < 20; ++i) {
        const Rot3 a = rot_about_axis(normalized(random_vec(rng) + Vec3{0.2, 0, 0}),
                                      rng.uniform(-6, 6));
        const Vec3 omega = random_vec(rng);
        const auto rs = positions_abs(rand_body, a);
        const auto vs = velocities(rand_body, a, omega);
        for (std::size_t k = 0; k < rs.size(); ++k) {
            CHECK(std::abs(dot(vs[k], rs[k])) < 1e-12);
        }
    }
}

TEST_CASE("angular momentum and kinetic energy sums") {
    const PointMassBody body = single_mass(1.0, {1, 0, 0});
    CHECK((angular_momentum(body, Rot3::identity(), {0, 0, 1}) - Vec3{0, 0, 1}).norm()
          < 1e-15);
    CHECK(angular_momentum(body, Rot3::identity(), {0, 0, 0}).norm() == 0.0);
    CHECK(kinetic_energy(body, Rot3::identity(), {0, 0, 1}) == doctest::Approx(0.5));
    CHECK(kinetic_energy(body, Rot3::identity(), {0, 0, 0}) == 0.0);

    Rng rng(33);
    const PointMassBody rand_body = random_body(9, 5, 1.1);
    const Mat3 inertia = inertia_tensor(rand_body).m;
    for (int i = 0; i < 50; ++i) {
        const Rot3 a = rot_about_axis(normalized(random_vec(rng) + Vec3{0.2, 0, 0}),
                                      rng.uniform(-6, 6));
        const Vec3 omega = random_vec(rng);

        // inertia-tensor oracle: G_abs = A^T (I (A omega))
        const Vec3 g_sum = angular_momentum(rand_body, a, omega);
        const Vec3 g_tensor = a.apply_inverse(inertia * (a * omega));
        CHECK((g_sum - g_tensor).norm() < 1e-12 * (1.0 + g_sum.norm()));

        const double t_sum = kinetic_energy(rand_body, a, omega);
        const Vec3 omega_body = a * omega;
        CHECK(t_sum == doctest::Approx(0.5 * dot(omega_body, inertia * omega_body))
                           .epsilon(1e-12));

        // T = (1/2) omega . G, exact for rigid rotation about a fixed point
        CHECK(std::abs(t_sum - 0.5 * dot(omega, g_sum)) <= 1e-12 * (1.0 + t_sum));
    }
}

TEST_CASE("angular momentum frame covariance") {
    Rng rng(34);
    const PointMassBody body = random_body(10, 5, 1.0);
    for (int i = 0; i < 20; ++i) {
        const Rot3 a = rot_about_axis(normalized(random_vec(rng) + Vec3{0.2, 0, 0}),
                                      rng.uniform(-6, 6));
        const Rot3 r0 = rot_about_axis(normalized(random_vec(rng) + Vec3{0, 0.2, 0}),
                                       rng.uniform(-6, 6));
        const Vec3 omega = random_vec(rng);

        PointMassBody rotated = body;
        for (auto& e : rotated.entries) e.position = r0 * e.position;

        const Vec3 g1 = angular_momentum(body, a, omega);
        const Vec3 g2 = angular_momentum(rotated, r0 * a, omega);
        CHECK((g1 - g2).norm() < 1e-10 * (1.0 + g1.norm()));
    }
}

TEST_CASE("inertia tensor") {
    const auto i1 = inertia_tensor(single_mass(1.0, {1, 0, 0})).m;
    CHECK(i1(0, 0) == doctest::Approx(0.0));
    CHECK(i1(1, 1) == doctest::Approx(1.0));
    CHECK(i1(2, 2) == doctest::Approx(1.0));

    const PointMassBody two{{{1.0, {0, 0, 1}}, {1.0, {0, 0, -1}}}};
    const auto i2 = inertia_tensor(two).m;
    CHECK(i2(0, 0) == doctest::Approx(2.0));
    CHECK(i2(1, 1) == doctest::Approx(2.0));
    CHECK(i2(2, 2) == doctest::Approx(0.0));

    inertia_tensor(random_body(3, 5, 1.0)).validate();
}

TEST_CASE("euler momenta") {
    const PointMassBody body = random_body(40, 5, 1.0);
    Rng rng(35);

    const EulerMomenta zero = euler_momenta(body, random_euler(rng), {0, 0, 0});
    CHECK(zero.p_phi == 0.0);
    CHECK(zero.p_theta == 0.0);
    CHECK(zero.p_psi == 0.0);

    // definition check: p_j = dT/dqdot_j by central finite difference
    for (int i = 0; i < 30; ++i) {
        const EulerAngles q = random_euler(rng);
        const EulerRates qd{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const EulerMomenta p = euler_momenta(body, q, qd);
        const double h = 1e-6;
        const double want[3] = {p.p_phi, p.p_theta, p.p_psi};
        for (int j = 0; j < 3; ++j) {
            EulerRates dp = qd, dm = qd;
            (j == 0 ? dp.phi : j == 1 ? dp.theta : dp.psi) += h;
            (j == 0 ? dm.phi : j == 1 ? dm.theta : dm.psi) -= h;
            const double fd =
                (energy_of_rates(body, q, dp) - energy_of_rates(body, q, dm)) / (2.0 * h);
            CHECK(fd == doctest::Approx(want[j]).epsilon(1e-7));
        }
    }
}

TEST_CASE("euler momenta of a spherical body") {
    // four unit masses at regular-tetrahedron vertices: I = 8 Id
    const double s = 1.0;
    const PointMassBody tetra{{{1.0, {s, s, s}},
                               {1.0, {s, -s, -s}},
                               {1.0, {-s, s, -s}},
                               {1.0, {-s, -s, s}}}};
    const Mat3 inertia = inertia_tensor(tetra).m;
    const double c = inertia(0, 0);
    CHECK(c == doctest::Approx(8.0));
    CHECK((inertia - Mat3::identity() * c).max_abs() < 1e-12);

    Rng rng(36);
    for (int i = 0; i < 20; ++i) {
        const EulerAngles q = random_euler(rng);
        const EulerRates qd{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const EulerMomenta p = euler_momenta(tetra, q, qd);
        CHECK(p.p_psi == doctest::Approx(c * (qd.psi + qd.phi * std::cos(q.theta))));
    }
}

TEST_CASE("random_body contract") {
    const PointMassBody a = random_body(123, 6, 2.0);
    const PointMassBody b = random_body(123, 6, 2.0);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].mass == b.entries[i].mass);
        CHECK((a.entries[i].position - b.entries[i].position).norm() == 0.0);
    }

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const PointMassBody body = random_body(seed, 5, 1.0);
        CHECK(body.nondegenerate());
        const auto ev = sym_eigenvalues(inertia_tensor(body).m);
        CHECK(ev[0] >= 0.05 * ev[2]);
        for (const auto& e : body.entries) {
            CHECK(e.mass >= 0.5);
            CHECK(e.mass <= 2.0);
            CHECK(e.position.norm() <= 1.0);
        }
    }

    CHECK_THROWS_AS(random_body(1, 3, 1.0), InvalidState);
}

TEST_CASE("lagrange relation for the euler chart, point-mass-wise") {
    const PointMassBody body = random_body(50, 5, 1.0);
    Rng rng(37);
    const double h = 1e-5;
    for (int i = 0; i < 10; ++i) {
        const EulerAngles q = random_euler(rng);
        const EulerRates qd{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        for (int j = 0; j < 3; ++j) {
            EulerAngles qp = q, qm = q;
            EulerRates dp = qd, dm = qd;
            (j == 0 ? qp.phi : j == 1 ? qp.theta : qp.psi) += h;
            (j == 0 ? qm.phi : j == 1 ? qm.theta : qm.psi) -= h;
            (j == 0 ? dp.phi : j == 1 ? dp.theta : dp.psi) += h;
            (j == 0 ? dm.phi : j == 1 ? dm.theta : dm.psi) -= h;

            const auto rp = positions_abs(body, euler_attitude(qp));
            const auto rm = positions_abs(body, euler_attitude(qm));
            const Rot3 a = euler_attitude(q);
            const auto vp = velocities(body, a, a.apply_inverse(euler_kinematics(q, dp)));
            const auto vm = velocities(body, a, a.apply_inverse(euler_kinematics(q, dm)));
            for (std::size_t k = 0; k < body.entries.size(); ++k) {
                const Vec3 dr = (rp[k] - rm[k]) / (2.0 * h);
                const Vec3 dv = (vp[k] - vm[k]) / (2.0 * h);
                CHECK((dr - dv).norm() < 1e-6 * (1.0 + dr.norm()));
            }
        }
    }
}
