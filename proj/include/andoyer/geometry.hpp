#pragma once

#include <array>
#include <cmath>

#include "andoyer/errors.hpp"

namespace andoyer {

inline constexpr double ORTHO_TOL = 1e-12;
inline constexpr double UNIT_AXIS_TOL = 1e-9;
inline constexpr double TWO_PI = 6.283185307179586476925286766559;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }

    double norm2() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// Scalar triple product a . (b x c).
inline double mixed(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

inline Vec3 normalized(const Vec3& v) {
    const double n = v.norm();
    return v / n;
}

// Plain 3x3 matrix, row-major. Unconstrained; Rot3 below adds the SO(3) contract.
struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    static Mat3 identity() {
        Mat3 r;
        r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
        return r;
    }
    static Mat3 zero() { return Mat3{}; }

    double& operator()(int i, int j) { return m[i][j]; }
    double operator()(int i, int j) const { return m[i][j]; }

    Vec3 row(int i) const { return {m[i][0], m[i][1], m[i][2]}; }
    Vec3 col(int j) const { return {m[0][j], m[1][j], m[2][j]}; }

    Mat3 transpose() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
        return r;
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }

    Vec3 operator*(const Vec3& v) const {
        return {dot(row(0), v), dot(row(1), v), dot(row(2), v)};
    }

    Mat3 operator*(double s) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] * s;
        return r;
    }

    Mat3 operator+(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
        return r;
    }

    Mat3 operator-(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
        return r;
    }

    double det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
             - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
             + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    double max_abs() const {
        double r = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r = std::max(r, std::abs(m[i][j]));
        return r;
    }
};

// Adjugate inverse; throws SingularInertia when |det| is tiny relative to scale.
Mat3 inverse(const Mat3& a);

// Solve a x = b for a single right-hand side.
Vec3 solve(const Mat3& a, const Vec3& b);

// Ascending eigenvalues of a symmetric 3x3 matrix (cyclic Jacobi).
std::array<double, 3> sym_eigenvalues(const Mat3& a);

// Proper-orthogonal 3x3 matrix, interpreted as a passive rotation:
// v_target_frame = R * v_source_frame for one and the same physical vector.
class Rot3 {
  public:
    // Validates ||R^T R - I||_inf <= ORTHO_TOL and det = 1 +- ORTHO_TOL.
    explicit Rot3(const Mat3& m);

    static Rot3 identity() { return Rot3(Mat3::identity()); }

    const Mat3& mat() const { return m_; }
    double operator()(int i, int j) const { return m_(i, j); }
    Vec3 row(int i) const { return m_.row(i); }
    Vec3 col(int j) const { return m_.col(j); }

    Rot3 transpose() const { return Rot3(m_.transpose()); }
    Rot3 operator*(const Rot3& o) const { return Rot3(m_ * o.m_); }
    Vec3 operator*(const Vec3& v) const { return m_ * v; }

    // Coordinates of a vector given in this rotation's target frame,
    // re-expressed in the source frame (i.e. R^T v without revalidation).
    Vec3 apply_inverse(const Vec3& v) const { return m_.transpose() * v; }

  private:
    Mat3 m_;
};

// Passive elementary rotation about coordinate axis 1, 2 or 3.
// Sign convention: elem_rot(3, a) has first row (cos a, sin a, 0) -- the
// frame turns counterclockwise, so coordinates turn clockwise.
Rot3 elem_rot(int axis_index, double angle);

// Active rotation by `angle` about a unit axis (Rodrigues formula).
// rot_about_axis(u, a) == elem_rot(u-axis, a)^T for coordinate axes.
Rot3 rot_about_axis(const Vec3& axis, double angle);

// Reduce an angle to [0, 2*pi).
inline double wrap_angle(double a) {
    double r = std::fmod(a, TWO_PI);
    if (r < 0.0) r += TWO_PI;
    if (r >= TWO_PI) r = 0.0;
    return r;
}

// Signed difference a - b reduced to (-pi, pi].
inline double angle_diff(double a, double b) {
    double d = std::remainder(a - b, TWO_PI);
    return d;
}

}  // namespace andoyer
