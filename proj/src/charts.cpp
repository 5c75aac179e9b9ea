#include "andoyer/charts.hpp"

#include <cmath>

namespace andoyer {

void AndoyerState::validate() const {
    const bool finite = std::isfinite(l) && std::isfinite(g) && std::isfinite(theta)
                     && std::isfinite(L) && std::isfinite(G) && std::isfinite(Theta);
    if (!finite) throw InvalidState("AndoyerState has non-finite fields");
    if (G <= 0.0) throw InvalidState("AndoyerState requires G > 0");
    if (std::abs(L) > G || std::abs(Theta) > G) {
        throw InvalidState("AndoyerState requires |L| <= G and |Theta| <= G");
    }
}

Rot3 attitude_from_angles(double l, double chi, double g, double rho, double theta) {
    return elem_rot(3, l) * elem_rot(1, chi) * elem_rot(3, g) * elem_rot(1, rho)
         * elem_rot(3, theta);
}

Rot3 body_attitude(const AndoyerState& a) {
    a.validate();
    return attitude_from_angles(a.l, a.chi(), a.g, a.rho(), a.theta);
}

FrameBasis frame_vectors(const AndoyerState& a) {
    a.validate();
    if (a.G - std::abs(a.L) <= NODE_SING_TOL * a.G) {
        throw ChartSingular("|L| = G: node between invariable and body planes undefined");
    }
    if (a.G - std::abs(a.Theta) <= NODE_SING_TOL * a.G) {
        throw ChartSingular("|Theta| = G: node between absolute and invariable planes undefined");
    }
    const Rot3 p1 = elem_rot(3, a.theta);
    const Rot3 p2 = elem_rot(1, a.rho()) * p1;
    const Rot3 p3 = elem_rot(3, a.g) * p2;
    const Rot3 a_full = elem_rot(3, a.l) * elem_rot(1, a.chi()) * p3;
    FrameBasis f;
    f.e_Z = {0.0, 0.0, 1.0};
    f.n1 = p1.row(0);    // node carried by the theta rotation
    f.e_3 = p2.row(2);   // angular momentum direction
    f.n2 = p3.row(0);    // node carried by the g rotation
    f.e_z = a_full.row(2);
    return f;
}

Vec3 virtual_rotation_axis(const AndoyerState& a, AndoyerAngle which) {
    switch (which) {
        case AndoyerAngle::theta:
            return {0.0, 0.0, 1.0};
        case AndoyerAngle::g:
            return momentum_vector_abs(a) / a.G;
        case AndoyerAngle::l: {
            a.validate();
            return body_attitude(a).row(2);
        }
        case AndoyerAngle::chi:
            return frame_vectors(a).n2;
        case AndoyerAngle::rho:
            return frame_vectors(a).n1;
    }
    throw InvalidState("unknown chart angle");
}

Vec3 momentum_vector_abs(const AndoyerState& a) {
    a.validate();
    // Third row of R1(rho) R3(theta), scaled by G.
    const double sr = std::sin(a.rho());
    const double cr = a.Theta / a.G;
    return Vec3{sr * std::sin(a.theta), -sr * std::cos(a.theta), cr} * a.G;
}

Vec3 momentum_vector_body(const AndoyerState& a) {
    a.validate();
    const double s = std::sqrt(std::max(a.G * a.G - a.L * a.L, 0.0));
    return {s * std::sin(a.l), s * std::cos(a.l), a.L};
}

AndoyerState andoyer_from_state(const Rot3& attitude, const Vec3& g_vec) {
    const double g_norm = g_vec.norm();
    if (g_norm == 0.0) throw ZeroMomentum();
    const Vec3 e_Z{0.0, 0.0, 1.0};
    const Vec3 e_3 = g_vec / g_norm;
    const Vec3 e_z = attitude.row(2);
    const Vec3 e_x = attitude.row(0);

    AndoyerState a;
    a.G = g_norm;
    a.Theta = dot(g_vec, e_Z);
    a.L = dot(g_vec, e_z);

    if (g_norm - std::abs(a.L) <= NODE_SING_TOL * g_norm) {
        throw ChartSingular("|L| = G: angles l and g not separately defined");
    }
    if (g_norm - std::abs(a.Theta) <= NODE_SING_TOL * g_norm) {
        throw ChartSingular("|Theta| = G: angles g and theta not separately defined");
    }

    const Vec3 n1 = normalized(cross(e_Z, e_3));
    const Vec3 n2 = normalized(cross(e_3, e_z));

    a.theta = wrap_angle(std::atan2(n1.y, n1.x));
    a.g = wrap_angle(std::atan2(dot(cross(n1, n2), e_3), dot(n1, n2)));
    a.l = wrap_angle(std::atan2(dot(cross(n2, e_x), e_z), dot(n2, e_x)));
    return a;
}

Rot3 euler_attitude(const EulerAngles& q) {
    return elem_rot(3, q.psi) * elem_rot(1, q.theta) * elem_rot(3, q.phi);
}

Mat3 euler_kinematic_matrix(const EulerAngles& q) {
    const double st = std::sin(q.theta);
    const double ct = std::cos(q.theta);
    const double sp = std::sin(q.psi);
    const double cp = std::cos(q.psi);
    Mat3 b;
    b(0, 0) = st * sp; b(0, 1) = cp;  b(0, 2) = 0.0;
    b(1, 0) = st * cp; b(1, 1) = -sp; b(1, 2) = 0.0;
    b(2, 0) = ct;      b(2, 1) = 0.0; b(2, 2) = 1.0;
    return b;
}

Vec3 euler_kinematics(const EulerAngles& q, const EulerRates& qdot) {
    return euler_kinematic_matrix(q) * Vec3{qdot.phi, qdot.theta, qdot.psi};
}

Vec3 rates_to_omega(const AndoyerState& a, const AndoyerRates& rates) {
    const FrameBasis f = frame_vectors(a);
    return f.e_z * rates.l + f.n2 * rates.chi + f.e_3 * rates.g + f.n1 * rates.rho
         + f.e_Z * rates.theta;
}

}  // namespace andoyer
