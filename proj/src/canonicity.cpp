#include "andoyer/canonicity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>

#include "andoyer/random.hpp"

namespace andoyer {

namespace {

double g_corruption_amplitude = 0.0;

struct Vec6 {
    double v[6];
};

Vec6 chart_map(const PointMassBody& body, const EulerAngles& q, const EulerMomenta& p) {
    const AndoyerState a = andoyer_coordinates(body, q, p);
    return {{a.l, a.g, a.theta, a.L, a.G, a.Theta}};
}

// Central difference of the chart map along a phase-space tangent.
// Angle components are differenced modulo 2*pi.
Vec6 chart_directional_fd(const PointMassBody& body, const EulerAngles& q,
                          const EulerMomenta& p, const double dq[3], const double dp[3],
                          double h) {
    const EulerAngles qp{q.phi + h * dq[0], q.theta + h * dq[1], q.psi + h * dq[2]};
    const EulerAngles qm{q.phi - h * dq[0], q.theta - h * dq[1], q.psi - h * dq[2]};
    const EulerMomenta pp{p.p_phi + h * dp[0], p.p_theta + h * dp[1], p.p_psi + h * dp[2]};
    const EulerMomenta pm{p.p_phi - h * dp[0], p.p_theta - h * dp[1], p.p_psi - h * dp[2]};
    const Vec6 wp = chart_map(body, qp, pp);
    const Vec6 wm = chart_map(body, qm, pm);
    Vec6 d;
    for (int i = 0; i < 3; ++i) d.v[i] = angle_diff(wp.v[i], wm.v[i]) / (2.0 * h);
    for (int i = 3; i < 6; ++i) d.v[i] = (wp.v[i] - wm.v[i]) / (2.0 * h);
    return d;
}

}  // namespace

void set_chart_corruption(double amplitude) { g_corruption_amplitude = amplitude; }
double chart_corruption() { return g_corruption_amplitude; }

AndoyerState andoyer_coordinates(const PointMassBody& body, const EulerAngles& q,
                                 const EulerMomenta& p) {
    const Rot3 attitude = euler_attitude(q);
    const Mat3 mass = euler_mass_matrix(body, q);
    const Vec3 qdot = solve(mass, {p.p_phi, p.p_theta, p.p_psi});
    const Vec3 omega_body = euler_kinematic_matrix(q) * qdot;
    const Vec3 omega_abs = attitude.apply_inverse(omega_body);
    const Vec3 g_vec = angular_momentum(body, attitude, omega_abs);
    AndoyerState a = andoyer_from_state(attitude, g_vec);
    if (g_corruption_amplitude != 0.0) {
        a.l = wrap_angle(a.l + g_corruption_amplitude * std::sin(a.l));
    }
    return a;
}

PhasePoint make_phase_point(const PointMassBody& body, const EulerAngles& q,
                            const EulerMomenta& p) {
    body.validate();
    const Rot3 attitude = euler_attitude(q);
    const Mat3 mass = euler_mass_matrix(body, q);
    const Vec3 qd = solve(mass, {p.p_phi, p.p_theta, p.p_psi});
    const Vec3 omega_body = euler_kinematic_matrix(q) * qd;
    const Vec3 omega_abs = attitude.apply_inverse(omega_body);
    const Vec3 g_vec = angular_momentum(body, attitude, omega_abs);
    return PhasePoint{q,
                      p,
                      EulerRates{qd.x, qd.y, qd.z},
                      attitude,
                      omega_abs,
                      g_vec,
                      andoyer_from_state(attitude, g_vec)};
}

PhasePoint make_phase_point_from_rates(const PointMassBody& body, const EulerAngles& q,
                                       const EulerRates& qdot) {
    // Direct construction: no mass-matrix solve, so chart degeneracies
    // surface as ChartSingular even where sin(theta) = 0.
    body.validate();
    const Rot3 attitude = euler_attitude(q);
    const EulerMomenta p = euler_momenta(body, q, qdot);
    const Vec3 omega_body = euler_kinematics(q, qdot);
    const Vec3 omega_abs = attitude.apply_inverse(omega_body);
    const Vec3 g_vec = angular_momentum(body, attitude, omega_abs);
    return PhasePoint{q,      p,         qdot,
                      attitude, omega_abs, g_vec,
                      andoyer_from_state(attitude, g_vec)};
}

CoefficientSet virtual_coefficients_fd(const PointMassBody& body, const PhasePoint& point,
                                       double h) {
    if (!(h >= 1e-8 && h <= 1e-3)) throw InvalidState("virtual_coefficients_fd: h out of range");
    const AndoyerState& a = point.andoyer;
    const double chi = a.chi();
    const double rho = a.rho();
    const auto vel = velocities(body, point.attitude, point.omega_abs);

    const auto coeff = [&](int which) {
        double ang[5] = {a.l, chi, a.g, rho, a.theta};
        // FD order is (l, g, theta, chi, rho); chain order is (l, chi, g, rho, theta).
        static constexpr int slot[5] = {0, 2, 4, 1, 3};
        double plus[5], minus[5];
        for (int i = 0; i < 5; ++i) plus[i] = minus[i] = ang[i];
        plus[slot[which]] += h;
        minus[slot[which]] -= h;
        const Rot3 ap = attitude_from_angles(plus[0], plus[1], plus[2], plus[3], plus[4]);
        const Rot3 am = attitude_from_angles(minus[0], minus[1], minus[2], minus[3], minus[4]);
        double k = 0.0;
        for (std::size_t i = 0; i < body.entries.size(); ++i) {
            const Vec3 dr = (ap.apply_inverse(body.entries[i].position)
                             - am.apply_inverse(body.entries[i].position))
                          / (2.0 * h);
            k += body.entries[i].mass * dot(vel[i], dr);
        }
        return k;
    };

    return {coeff(0), coeff(1), coeff(2), coeff(3), coeff(4)};
}

CoefficientSet virtual_coefficients_analytic(const PointMassBody& body,
                                             const PhasePoint& point) {
    (void)body;
    const AndoyerState& a = point.andoyer;
    const Vec3& g = point.g_vec;
    return {dot(g, virtual_rotation_axis(a, AndoyerAngle::l)),
            dot(g, virtual_rotation_axis(a, AndoyerAngle::g)),
            dot(g, virtual_rotation_axis(a, AndoyerAngle::theta)),
            dot(g, virtual_rotation_axis(a, AndoyerAngle::chi)),
            dot(g, virtual_rotation_axis(a, AndoyerAngle::rho))};
}

namespace {

double oneform_max_residual(const PointMassBody& body, const PhasePoint& point,
                            int directions, double h, std::uint64_t seed) {
    Rng rng(Rng::stream_seed(seed, 0x1F0));
    const Vec6 w0 = chart_map(body, point.q, point.p);
    const double big_l = w0.v[3], big_g = w0.v[4], big_t = w0.v[5];
    double worst = 0.0;
    for (int d = 0; d < directions; ++d) {
        double dq[3], dp[3];
        double n2 = 0.0;
        for (int i = 0; i < 3; ++i) {
            dq[i] = rng.uniform(-1.0, 1.0);
            dp[i] = rng.uniform(-1.0, 1.0);
            n2 += dq[i] * dq[i] + dp[i] * dp[i];
        }
        const double inv = 1.0 / std::sqrt(n2);
        for (int i = 0; i < 3; ++i) { dq[i] *= inv; dp[i] *= inv; }
        const double lhs = point.p.p_phi * dq[0] + point.p.p_theta * dq[1]
                         + point.p.p_psi * dq[2];
        const Vec6 dw = chart_directional_fd(body, point.q, point.p, dq, dp, h);
        const double rhs = big_l * dw.v[0] + big_g * dw.v[1] + big_t * dw.v[2];
        worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
    }
    return worst;
}

// Halving the step must not turn a pass into noise; central differences
// shrink their truncation error, so growth past the tolerance flags a
// noise-dominated result.
void richardson_guard(const char* name, double res_h, double res_half, double tolerance) {
    if (res_half > tolerance && res_half > 2.0 * res_h) {
        throw StepTooSmall(std::string(name) + ": residual grows from "
                           + std::to_string(res_h) + " to " + std::to_string(res_half)
                           + " under step halving");
    }
}

}  // namespace

CheckReport oneform_check(const PointMassBody& body, const PhasePoint& point, int directions,
                          double h, std::uint64_t seed, double tolerance) {
    const double res = oneform_max_residual(body, point, directions, h, seed);
    const double res_half = oneform_max_residual(body, point, directions, h / 2.0, seed);
    richardson_guard("oneform_check", res, res_half, tolerance);
    CheckReport r{"oneform", res, tolerance, 1, seed, res <= tolerance, {res}};
    return r;
}

namespace {

double symplectic_max_residual(const PointMassBody& body, const PhasePoint& point, double h) {
    double jac[6][6];
    for (int k = 0; k < 6; ++k) {
        double dq[3] = {0, 0, 0}, dp[3] = {0, 0, 0};
        if (k < 3) dq[k] = 1.0; else dp[k - 3] = 1.0;
        const Vec6 col = chart_directional_fd(body, point.q, point.p, dq, dp, h);
        for (int i = 0; i < 6; ++i) jac[i][k] = col.v[i];
    }
    // omega(i, j) for ordering (l, g, theta, L, G, Theta) / (q, p)
    const auto omega = [](int i, int j) -> double {
        if (j == i + 3) return 1.0;
        if (i == j + 3) return -1.0;
        return 0.0;
    };
    double worst = 0.0;
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
            // (J Omega J^T)_ab = sum_k J_ak J_b(k+3) - J_a(k+3) J_bk
            double s = 0.0;
            for (int k = 0; k < 3; ++k) {
                s += jac[a][k] * jac[b][k + 3] - jac[a][k + 3] * jac[b][k];
            }
            worst = std::max(worst, std::abs(s - omega(a, b)));
        }
    }
    return worst;
}

}  // namespace

CheckReport symplectic_jacobian_check(const PointMassBody& body, const PhasePoint& point,
                                      double h, std::uint64_t seed, double tolerance) {
    const double res = symplectic_max_residual(body, point, h);
    const double res_half = symplectic_max_residual(body, point, h / 2.0);
    richardson_guard("symplectic_jacobian_check", res, res_half, tolerance);
    CheckReport r{"symplectic_jacobian", res, tolerance, 1, seed, res <= tolerance, {res}};
    return r;
}

namespace {

double lagrange_max_residual(const PointMassBody& body, const EulerAngles& q,
                             const EulerRates& qdot, double h) {
    const auto pos_of = [&](const EulerAngles& qq) {
        return positions_abs(body, euler_attitude(qq));
    };
    const auto vel_of = [&](const EulerRates& qd) {
        const Rot3 a = euler_attitude(q);
        const Vec3 omega = a.apply_inverse(euler_kinematics(q, qd));
        return velocities(body, a, omega);
    };
    double worst = 0.0;
    for (int j = 0; j < 3; ++j) {
        EulerAngles qp = q, qm = q;
        EulerRates dp = qdot, dm = qdot;
        switch (j) {
            case 0: qp.phi += h; qm.phi -= h; dp.phi += h; dm.phi -= h; break;
            case 1: qp.theta += h; qm.theta -= h; dp.theta += h; dm.theta -= h; break;
            case 2: qp.psi += h; qm.psi -= h; dp.psi += h; dm.psi -= h; break;
        }
        const auto rp = pos_of(qp), rm = pos_of(qm);
        const auto vp = vel_of(dp), vm = vel_of(dm);
        for (std::size_t i = 0; i < body.entries.size(); ++i) {
            const Vec3 dr_dq = (rp[i] - rm[i]) / (2.0 * h);
            const Vec3 dv_dqd = (vp[i] - vm[i]) / (2.0 * h);
            worst = std::max(worst, (dr_dq - dv_dqd).norm() / (1.0 + dr_dq.norm()));
        }
    }
    return worst;
}

}  // namespace

CheckReport lagrange_relation_check(const PointMassBody& body, const EulerAngles& q,
                                    const EulerRates& qdot, double h, std::uint64_t seed,
                                    double tolerance) {
    const double res = lagrange_max_residual(body, q, qdot, h);
    const double res_half = lagrange_max_residual(body, q, qdot, h / 2.0);
    richardson_guard("lagrange_relation_check", res, res_half, tolerance);
    CheckReport r{"lagrange_relation", res, tolerance, 1, seed, res <= tolerance, {res}};
    return r;
}

std::pair<PointMassBody, PhasePoint> draw_fixture(std::uint64_t seed, std::uint64_t trial,
                                                  const SuiteOptions& options,
                                                  int* resamples_out) {
    Rng rng(Rng::stream_seed(seed, trial));
    PointMassBody body = options.fixed_body
                             ? *options.fixed_body
                             : random_body(rng.next_u64(), options.body_n, options.body_scale);
    constexpr double kThetaMargin = 0.2;  // Euler chart conditioning
    for (int attempt = 0; attempt < 100; ++attempt) {
        const EulerAngles q{rng.uniform(0.0, TWO_PI),
                            rng.uniform(kThetaMargin, M_PI - kThetaMargin),
                            rng.uniform(0.0, TWO_PI)};
        const EulerRates qd{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                            rng.uniform(-1.0, 1.0)};
        try {
            PhasePoint point = make_phase_point_from_rates(body, q, qd);
            const AndoyerState& a = point.andoyer;
            if (a.G < 0.05) continue;
            if (std::abs(a.L) > FIXTURE_SING_BAND * a.G) continue;
            if (std::abs(a.Theta) > FIXTURE_SING_BAND * a.G) continue;
            if (resamples_out) *resamples_out = attempt;
            return {std::move(body), std::move(point)};
        } catch (const ChartSingular&) {
        } catch (const ZeroMomentum&) {
        }
    }
    throw FixtureError("draw_fixture: 100 singular draws for trial "
                       + std::to_string(trial));
}

std::vector<CheckReport> run_suite(std::uint64_t seed, const SuiteOptions& options) {
    if (options.trials < 1) throw InvalidState("run_suite needs trials >= 1");
    const int trials = options.trials;

    struct TrialResult {
        double coefficients = 0.0, oneform = 0.0, symplectic = 0.0, lagrange = 0.0;
        int resamples = 0;
    };
    std::vector<TrialResult> results(static_cast<std::size_t>(trials));

    const auto run_trial = [&](int t) {
        int resamples = 0;
        auto [body, point] = draw_fixture(seed, static_cast<std::uint64_t>(t), options,
                                          &resamples);
        TrialResult r;
        r.resamples = resamples;

        const CoefficientSet k = virtual_coefficients_fd(body, point, DEFAULT_H_ANGLE);
        const AndoyerState& a = point.andoyer;
        r.coefficients = std::max({std::abs(k.k_l - a.L), std::abs(k.k_g - a.G),
                                   std::abs(k.k_theta - a.Theta), std::abs(k.k_chi),
                                   std::abs(k.k_rho)})
                       / a.G;

        const std::uint64_t sub = Rng::stream_seed(seed, 0x5EEDull + t);
        r.oneform = oneform_check(body, point, options.oneform_directions, DEFAULT_H_ANGLE,
                                  sub, options.tolerances.oneform)
                        .max_residual;
        r.symplectic = symplectic_jacobian_check(body, point, DEFAULT_H_MOMENTUM, sub,
                                                 options.tolerances.symplectic)
                           .max_residual;
        r.lagrange = lagrange_relation_check(body, point.q, point.qdot, DEFAULT_H_ANGLE, sub,
                                             options.tolerances.lagrange)
                         .max_residual;
        results[static_cast<std::size_t>(t)] = r;
    };

    if (options.jobs <= 1) {
        for (int t = 0; t < trials; ++t) run_trial(t);
    } else {
        std::atomic<int> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        std::vector<std::thread> workers;
        const int jobs = std::min(options.jobs, trials);
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (;;) {
                    const int t = next.fetch_add(1);
                    if (t >= trials) return;
                    try {
                        run_trial(t);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!first_error) first_error = std::current_exception();
                        return;
                    }
                }
            });
        }
        for (auto& w : workers) w.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    long total_draws = 0, singular_draws = 0;
    for (const auto& r : results) {
        total_draws += r.resamples + 1;
        singular_draws += r.resamples;
    }
    if (singular_draws > 0.9 * static_cast<double>(total_draws)) {
        throw FixtureError("run_suite: more than 90% of fixture draws were singular");
    }

    const auto make_report = [&](const std::string& name, double tol,
                                 auto member) {
        CheckReport rep{name, 0.0, tol, trials, seed, false, {}};
        rep.details.reserve(results.size());
        for (const auto& r : results) {
            const double v = r.*member;
            rep.details.push_back(v);
            rep.max_residual = std::max(rep.max_residual, v);
        }
        rep.passed = rep.max_residual <= rep.tolerance;
        return rep;
    };

    return {make_report("virtual_coefficients", options.tolerances.coefficients,
                        &TrialResult::coefficients),
            make_report("oneform", options.tolerances.oneform, &TrialResult::oneform),
            make_report("symplectic_jacobian", options.tolerances.symplectic,
                        &TrialResult::symplectic),
            make_report("lagrange_relation", options.tolerances.lagrange,
                        &TrialResult::lagrange)};
}

}  // namespace andoyer
