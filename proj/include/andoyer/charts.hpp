#pragma once

#include "andoyer/geometry.hpp"

namespace andoyer {

inline constexpr double NODE_SING_TOL = 1e-9;  // relative to G

// Canonical Andoyer variables. Angles in radians, momenta in
// mass*length^2/time. G is the magnitude of the angular momentum, L its
// projection on the body z axis, Theta its projection on the absolute Z axis.
struct AndoyerState {
    double l = 0.0, g = 0.0, theta = 0.0;
    double L = 0.0, G = 0.0, Theta = 0.0;

    double chi() const { return std::acos(std::clamp(L / G, -1.0, 1.0)); }
    double rho() const { return std::acos(std::clamp(Theta / G, -1.0, 1.0)); }

    // Throws InvalidState unless G > 0, |L| <= G, |Theta| <= G, all finite.
    void validate() const;
};

// The frames the chart is built from, all expressed in absolute coordinates.
// n1 is the node between the absolute XY plane and the invariable plane
// (the plane orthogonal to the angular momentum); n2 the node between the
// invariable plane and the body xy plane.
struct FrameBasis {
    Vec3 e_Z;   // absolute Z axis
    Vec3 e_3;   // direction of the angular momentum
    Vec3 e_z;   // body z axis
    Vec3 n1;
    Vec3 n2;
};

enum class AndoyerAngle { l, g, theta, chi, rho };

// 3-1-3 Euler angles (phi, theta, psi). Velocity and momentum forms share
// the layout but are never mixed in one value.
struct EulerAngles {
    double phi = 0.0, theta = 0.0, psi = 0.0;
};
struct EulerRates {
    double phi = 0.0, theta = 0.0, psi = 0.0;
};
struct EulerMomenta {
    double p_phi = 0.0, p_theta = 0.0, p_psi = 0.0;
};

// Passive attitude from the raw chain angles:
//   A = R3(l) R1(chi) R3(g) R1(rho) R3(theta),   v_body = A v_abs.
Rot3 attitude_from_angles(double l, double chi, double g, double rho, double theta);

// Passive attitude of an Andoyer state. Total: defined at chart singularities.
Rot3 body_attitude(const AndoyerState& a);

// Frame unit vectors in absolute coordinates.
// Throws ChartSingular when |L| or |Theta| is within NODE_SING_TOL*G of G.
FrameBasis frame_vectors(const AndoyerState& a);

// Axis of the virtual rotation attached to one chart angle:
// l -> e_z, g -> e_3, theta -> e_Z, chi -> n2, rho -> n1.
Vec3 virtual_rotation_axis(const AndoyerState& a, AndoyerAngle which);

// Angular momentum vector G*e_3 in absolute coordinates.
Vec3 momentum_vector_abs(const AndoyerState& a);

// Angular momentum in body coordinates:
//   (sqrt(G^2-L^2) sin l, sqrt(G^2-L^2) cos l, L).
Vec3 momentum_vector_body(const AndoyerState& a);

// Inverse chart: recover the Andoyer state from a passive attitude and the
// absolute angular momentum vector. Angles come back in [0, 2*pi).
// Throws ZeroMomentum when Gvec vanishes and ChartSingular near |L| = G or
// |Theta| = G, where the node angles are not separately defined.
AndoyerState andoyer_from_state(const Rot3& attitude, const Vec3& g_vec);

// Passive 3-1-3 Euler attitude A = R3(psi) R1(theta) R3(phi).
Rot3 euler_attitude(const EulerAngles& q);

// 3-1-3 kinematic matrix B(q): columns are the body-frame coordinates of the
// phi, theta, psi rotation axes, so omega_body = B(q) qdot.
Mat3 euler_kinematic_matrix(const EulerAngles& q);

// Body-frame angular velocity of an Euler-chart motion.
Vec3 euler_kinematics(const EulerAngles& q, const EulerRates& qdot);

struct AndoyerRates {
    double l = 0.0, g = 0.0, theta = 0.0, chi = 0.0, rho = 0.0;
};

// Absolute angular velocity produced by the five chart angle rates:
//   omega = ldot e_z + chidot n2 + gdot e_3 + rhodot n1 + thetadot e_Z.
Vec3 rates_to_omega(const AndoyerState& a, const AndoyerRates& rates);

}  // namespace andoyer
