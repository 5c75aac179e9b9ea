#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "andoyer/body.hpp"
#include "andoyer/charts.hpp"

namespace andoyer {

// Fixtures with |L| or |Theta| above this fraction of G are resampled; the
// arccos in the chart inverse is too ill-conditioned beyond it.
inline constexpr double FIXTURE_SING_BAND = 0.999;

inline constexpr double DEFAULT_H_ANGLE = 1e-5;
inline constexpr double DEFAULT_H_MOMENTUM = 1e-6;

// One phase-space sample: the Euler-chart canonical pair plus everything
// derived from it through the body's mass matrix.
struct PhasePoint {
    EulerAngles q;
    EulerMomenta p;
    EulerRates qdot;
    Rot3 attitude;
    Vec3 omega_abs;
    Vec3 g_vec;          // absolute angular momentum
    AndoyerState andoyer;
};

// Builds the derived cache from (q, p). Throws ChartSingular / ZeroMomentum
// from the chart inverse and SingularInertia when M(q) cannot be solved.
PhasePoint make_phase_point(const PointMassBody& body, const EulerAngles& q,
                            const EulerMomenta& p);
PhasePoint make_phase_point_from_rates(const PointMassBody& body, const EulerAngles& q,
                                       const EulerRates& qdot);

struct CheckReport {
    std::string check_name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    int trials = 0;
    std::uint64_t seed = 0;
    bool passed = false;
    std::vector<double> details;  // per-trial residuals
};

// Measured coefficients of m_i rdot_i . dr_i over the five chart angles.
struct CoefficientSet {
    double k_l = 0.0, k_g = 0.0, k_theta = 0.0, k_chi = 0.0, k_rho = 0.0;
};

// Test-only negative control: distorts the chart inverse used by the checks,
// l -> l + amplitude * sin(l). A state-dependent distortion is needed; a
// constant angle offset has the same differential and is still canonical.
void set_chart_corruption(double amplitude);
double chart_corruption();

// The full chart map (q, p) -> (l, g, theta, L, G, Theta) the suite
// differentiates. Applies the corruption hook when set.
AndoyerState andoyer_coordinates(const PointMassBody& body, const EulerAngles& q,
                                 const EulerMomenta& p);

// Central finite differences of Sum m_i rdot_i . dr_i over each chart angle,
// holding the other four and the physical velocities fixed.
CoefficientSet virtual_coefficients_fd(const PointMassBody& body, const PhasePoint& point,
                                       double h);

// Closed form of the same coefficients: k_v = Gvec . axis(v).
CoefficientSet virtual_coefficients_analytic(const PointMassBody& body,
                                             const PhasePoint& point);

// p.dq versus L dl + G dg + Theta dtheta along random phase-space tangents.
CheckReport oneform_check(const PointMassBody& body, const PhasePoint& point, int directions,
                          double h, std::uint64_t seed, double tolerance = 1e-6);

// J Omega J^T = Omega for the 6x6 finite-difference Jacobian of
// (q, p) -> (l, g, theta, L, G, Theta).
CheckReport symplectic_jacobian_check(const PointMassBody& body, const PhasePoint& point,
                                      double h, std::uint64_t seed, double tolerance = 1e-4);

// dr_i/dq_j == drdot_i/dqdot_j for the Euler chart, both sides by central FD.
CheckReport lagrange_relation_check(const PointMassBody& body, const EulerAngles& q,
                                    const EulerRates& qdot, double h, std::uint64_t seed,
                                    double tolerance = 1e-6);

struct SuiteTolerances {
    double coefficients = 1e-6;   // relative to G
    double oneform = 1e-6;
    double symplectic = 1e-4;
    double lagrange = 1e-6;
};

struct SuiteOptions {
    int trials = 100;
    int oneform_directions = 100;
    SuiteTolerances tolerances;
    int jobs = 1;
    // Fixed body for every trial instead of per-trial random bodies.
    const PointMassBody* fixed_body = nullptr;
    int body_n = 5;
    double body_scale = 1.0;
};

// Runs all four checks over seeded random (body, point) fixtures. Trial t
// draws from an RNG stream keyed by (seed, t), so serial and parallel runs
// produce identical reports.
std::vector<CheckReport> run_suite(std::uint64_t seed, const SuiteOptions& options);

// Draw the trial fixture for (seed, trial): body plus nonsingular phase point.
// Exposed for the acceptance suite. Throws FixtureError after 100 resamples.
std::pair<PointMassBody, PhasePoint> draw_fixture(std::uint64_t seed, std::uint64_t trial,
                                                  const SuiteOptions& options,
                                                  int* resamples_out = nullptr);

}  // namespace andoyer
