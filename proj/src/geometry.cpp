#include "andoyer/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace andoyer {

Mat3 inverse(const Mat3& a) {
    const double d = a.det();
    const double scale = std::max(a.max_abs(), 1e-300);
    if (std::abs(d) < 1e-14 * scale * scale * scale) {
        throw SingularInertia("3x3 matrix numerically singular, |det| = " + std::to_string(std::abs(d)));
    }
    Mat3 r;
    r(0, 0) = (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) / d;
    r(0, 1) = (a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2)) / d;
    r(0, 2) = (a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1)) / d;
    r(1, 0) = (a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2)) / d;
    r(1, 1) = (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) / d;
    r(1, 2) = (a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2)) / d;
    r(2, 0) = (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0)) / d;
    r(2, 1) = (a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1)) / d;
    r(2, 2) = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) / d;
    return r;
}

Vec3 solve(const Mat3& a, const Vec3& b) { return inverse(a) * b; }

std::array<double, 3> sym_eigenvalues(const Mat3& a) {
    Mat3 s = a;
    for (int sweep = 0; sweep < 50; ++sweep) {
        double off = std::abs(s(0, 1)) + std::abs(s(0, 2)) + std::abs(s(1, 2));
        if (off < 1e-15 * std::max(1.0, s.max_abs())) break;
        for (int p = 0; p < 3; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                if (s(p, q) == 0.0) continue;
                const double theta = (s(q, q) - s(p, p)) / (2.0 * s(p, q));
                const double t = (theta >= 0.0 ? 1.0 : -1.0)
                               / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                Mat3 g = Mat3::identity();
                g(p, p) = c; g(q, q) = c; g(p, q) = sn; g(q, p) = -sn;
                s = g.transpose() * s * g;
            }
        }
    }
    std::array<double, 3> ev{s(0, 0), s(1, 1), s(2, 2)};
    std::sort(ev.begin(), ev.end());
    return ev;
}

Rot3::Rot3(const Mat3& m) : m_(m) {
    const Mat3 gram = m_.transpose() * m_;
    const double ortho_err = (gram - Mat3::identity()).max_abs();
    const double det_err = std::abs(m_.det() - 1.0);
    if (ortho_err > ORTHO_TOL || det_err > ORTHO_TOL) {
        throw InvalidState("matrix is not a proper rotation: ||R^T R - I|| = "
                           + std::to_string(ortho_err) + ", |det - 1| = "
                           + std::to_string(det_err));
    }
}

Rot3 elem_rot(int axis_index, double angle) {
    if (axis_index < 1 || axis_index > 3) throw InvalidState("axis_index must be 1, 2 or 3");
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    Mat3 r = Mat3::identity();
    switch (axis_index) {
        case 1:
            r(1, 1) = c; r(1, 2) = s;
            r(2, 1) = -s; r(2, 2) = c;
            break;
        case 2:
            r(0, 0) = c; r(0, 2) = -s;
            r(2, 0) = s; r(2, 2) = c;
            break;
        case 3:
            r(0, 0) = c; r(0, 1) = s;
            r(1, 0) = -s; r(1, 1) = c;
            break;
    }
    return Rot3(r);
}

Rot3 rot_about_axis(const Vec3& axis, double angle) {
    if (std::abs(axis.norm() - 1.0) > UNIT_AXIS_TOL) {
        throw InvalidState("rotation axis must be unit norm");
    }
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const Vec3& u = axis;
    Mat3 k = Mat3::zero();
    k(0, 1) = -u.z; k(0, 2) = u.y;
    k(1, 0) = u.z; k(1, 2) = -u.x;
    k(2, 0) = -u.y; k(2, 1) = u.x;
    Mat3 uut;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double ui = (i == 0 ? u.x : i == 1 ? u.y : u.z);
            const double uj = (j == 0 ? u.x : j == 1 ? u.y : u.z);
            uut(i, j) = ui * uj;
        }
    const Mat3 r = Mat3::identity() * c + k * s + uut * (1.0 - c);
    return Rot3(r);
}

}  // namespace andoyer
