#include <doctest.h>

#include <cmath>

#include "andoyer/geometry.hpp"
#include "andoyer/random.hpp"

using namespace andoyer;

namespace {

const Vec3 e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};

// Independent oracle: determinant of the 3x3 matrix with rows a, b, c by
// cofactor expansion, equal to the scalar triple product.
double det_oracle(const Vec3& a, const Vec3& b, const Vec3& c) {
    return a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x)
         + a.z * (b.x * c.y - b.y * c.x);
}

// Rodrigues formula applied componentwise, independent of Rot3.
Vec3 rodrigues_oracle(const Vec3& u, double angle, const Vec3& v) {
    const double c = std::cos(angle), s = std::sin(angle);
    return v * c + cross(u, v) * s + u * (dot(u, v) * (1.0 - c));
}

Vec3 random_vec(Rng& rng, double scale = 1.0) {
    return {rng.uniform(-scale, scale), rng.uniform(-scale, scale), rng.uniform(-scale, scale)};
}

}  // namespace

TEST_CASE("dot, cross and mixed products") {
    CHECK(mixed(e1, e2, e3) == doctest::Approx(1.0));
    const Vec3 z = cross(e1, e1);
    CHECK(z.norm() == 0.0);

    // coplanar triple: rows of the classic singular matrix
    const Vec3 a{1, 2, 3}, b{4, 5, 6}, c{7, 8, 9};
    CHECK(det_oracle(a, b, c) == doctest::Approx(0.0));
    CHECK(dot(a, cross(b, c)) == doctest::Approx(det_oracle(a, b, c)).epsilon(1e-12));

    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const Vec3 u = random_vec(rng), v = random_vec(rng), w = random_vec(rng);
        CHECK(mixed(u, v, w) == doctest::Approx(det_oracle(u, v, w)).epsilon(1e-12));
    }
}

TEST_CASE("mixed product cyclicity") {
    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        const Vec3 a = random_vec(rng), b = random_vec(rng), c = random_vec(rng);
        const double m = mixed(a, b, c);
        const double scale = 1.0 + std::abs(m);
        CHECK(std::abs(mixed(b, c, a) - m) <= 1e-12 * scale);
        CHECK(std::abs(mixed(c, a, b) - m) <= 1e-12 * scale);
    }
}

TEST_CASE("pivot identity: v.(e x r) = (r x v).e") {
    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        const Vec3 v = random_vec(rng), e = random_vec(rng), r = random_vec(rng);
        const double lhs = dot(v, cross(e, r));
        const double rhs = dot(cross(r, v), e);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
    }
}

TEST_CASE("elementary rotations") {
    const Rot3 id = elem_rot(3, 0.0);
    CHECK((id.mat() - Mat3::identity()).max_abs() == doctest::Approx(0.0));

    // passive sign convention: coordinates rotate clockwise
    const Vec3 r = elem_rot(3, M_PI / 2.0) * Vec3{1, 0, 0};
    CHECK(r.x == doctest::Approx(0.0));
    CHECK(r.y == doctest::Approx(-1.0));
    CHECK(r.z == doctest::Approx(0.0));

    Rng rng(14);
    for (int axis = 1; axis <= 3; ++axis) {
        for (int i = 0; i < 20; ++i) {
            const double a = rng.uniform(-6.0, 6.0), b = rng.uniform(-6.0, 6.0);
            const Mat3 prod = (elem_rot(axis, a) * elem_rot(axis, b)).mat();
            CHECK((prod - elem_rot(axis, a + b).mat()).max_abs() < 1e-13);
        }
    }
}

TEST_CASE("elem_rot is the transpose of the active rotation") {
    Rng rng(15);
    const Vec3 axes[3] = {e1, e2, e3};
    for (int axis = 1; axis <= 3; ++axis) {
        for (int i = 0; i < 20; ++i) {
            const double a = rng.uniform(-6.0, 6.0);
            const Mat3 passive = elem_rot(axis, a).mat();
            const Mat3 active_t = rot_about_axis(axes[axis - 1], a).mat().transpose();
            CHECK((passive - active_t).max_abs() < 1e-13);
        }
    }
}

TEST_CASE("rot_about_axis") {
    const Vec3 r = rot_about_axis(e3, M_PI / 2.0) * Vec3{1, 0, 0};
    CHECK(r.x == doctest::Approx(0.0));
    CHECK(r.y == doctest::Approx(1.0));  // counterclockwise

    Rng rng(16);
    for (int i = 0; i < 50; ++i) {
        const Vec3 u = normalized(random_vec(rng) + Vec3{0.1, 0.1, 0.1});
        CHECK((rot_about_axis(u, 0.0).mat() - Mat3::identity()).max_abs() < 1e-15);

        const double a = rng.uniform(-6.0, 6.0);
        const Vec3 v = random_vec(rng);
        const Vec3 got = rot_about_axis(u, a) * v;
        const Vec3 want = rodrigues_oracle(u, a, v);
        CHECK((got - want).norm() < 1e-12);

        // small-angle action is the cross product
        const double eps = 1e-6;
        const Vec3 fd = (rot_about_axis(u, eps) * v - v) / eps;
        CHECK((fd - cross(u, v)).norm() < 1e-6);
    }

    CHECK_THROWS_AS(rot_about_axis(Vec3{1, 1, 0}, 0.5), InvalidState);
}

TEST_CASE("Rot3 construction contract") {
    Rng rng(17);
    for (int i = 0; i < 50; ++i) {
        const Vec3 u = normalized(random_vec(rng) + Vec3{0.2, 0.0, 0.0});
        const Rot3 r = rot_about_axis(u, rng.uniform(-6.0, 6.0));
        const Mat3 gram = r.mat().transpose() * r.mat();
        CHECK((gram - Mat3::identity()).max_abs() <= ORTHO_TOL);
        CHECK(std::abs(r.mat().det() - 1.0) <= ORTHO_TOL);
    }
    Mat3 bad = Mat3::identity();
    bad(0, 0) = 1.1;
    CHECK_THROWS_AS((void)Rot3{bad}, InvalidState);
}

TEST_CASE("angle helpers") {
    CHECK(wrap_angle(-0.1) == doctest::Approx(TWO_PI - 0.1));
    CHECK(wrap_angle(TWO_PI + 0.3) == doctest::Approx(0.3));
    CHECK(angle_diff(0.1, TWO_PI - 0.1) == doctest::Approx(0.2));
    CHECK(angle_diff(TWO_PI - 0.1, 0.1) == doctest::Approx(-0.2));
}

TEST_CASE("symmetric eigenvalues and inverse") {
    Mat3 d = Mat3::zero();
    d(0, 0) = 3.0; d(1, 1) = 1.0; d(2, 2) = 2.0;
    const Rot3 r = rot_about_axis(normalized(Vec3{1, 2, -1}), 0.8);
    const Mat3 s = r.mat().transpose() * d * r.mat();
    const auto ev = sym_eigenvalues(s);
    CHECK(ev[0] == doctest::Approx(1.0));
    CHECK(ev[1] == doctest::Approx(2.0));
    CHECK(ev[2] == doctest::Approx(3.0));

    const Mat3 prod = s * inverse(s);
    CHECK((prod - Mat3::identity()).max_abs() < 1e-12);
}
