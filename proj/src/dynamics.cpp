#include "andoyer/dynamics.hpp"

#include <cmath>

namespace andoyer {

void HamiltonianSpec::validate() const {
    inertia.validate();
    const auto ev = sym_eigenvalues(inertia.m);
    if (!(ev[0] > 0.0)) throw SingularInertia("inertia tensor not positive definite");
    if (ev[2] / ev[0] > 1e12) throw SingularInertia("inertia condition number above 1e12");
}

namespace {

struct ReducedState {
    double l, g, L;
};

struct ReducedRates {
    double l, g, L;
};

// Gradient of H(l, L, G) = (1/2) M . W M through M = (s sin l, s cos l, L).
ReducedRates reduced_rhs(const Mat3& w, const ReducedState& y, double big_g) {
    const double s2 = big_g * big_g - y.L * y.L;
    const double s = std::sqrt(std::max(s2, 0.0));
    const double sl = std::sin(y.l), cl = std::cos(y.l);
    const Vec3 m{s * sl, s * cl, y.L};
    const Vec3 wm = w * m;
    const Vec3 dm_dl{s * cl, -s * sl, 0.0};
    const Vec3 dm_dL{-y.L / s * sl, -y.L / s * cl, 1.0};
    const Vec3 dm_dG{big_g / s * sl, big_g / s * cl, 0.0};
    return {dot(wm, dm_dL), dot(wm, dm_dG), -dot(wm, dm_dl)};
}

}  // namespace

double hamiltonian(const HamiltonianSpec& spec, const AndoyerState& a) {
    spec.validate();
    a.validate();
    const Vec3 m = momentum_vector_body(a);
    return 0.5 * dot(m, inverse(spec.inertia.m) * m);
}

AndoyerStateRates hamilton_rhs(const HamiltonianSpec& spec, const AndoyerState& a) {
    spec.validate();
    a.validate();
    const ReducedRates r = reduced_rhs(inverse(spec.inertia.m), {a.l, a.g, a.L}, a.G);
    return {r.l, r.g, 0.0, r.L, 0.0, 0.0};
}

AndoyerTrajectory integrate(const HamiltonianSpec& spec, const AndoyerState& a0, double t_end,
                            double dt, IntegrationMethod method) {
    spec.validate();
    a0.validate();
    if (!(dt > 0.0) || !(t_end >= 0.0)) throw InvalidState("integrate: dt > 0, t_end >= 0");
    const Mat3 w = inverse(spec.inertia.m);

    AndoyerTrajectory traj;
    AndoyerState a = a0;

    const auto push_sample = [&](double t) {
        const Vec3 m = momentum_vector_body(a);
        traj.samples.push_back({t, a, m, 0.5 * dot(m, w * m)});
    };
    const auto check_band = [&](double t) {
        if (std::abs(a.L) >= SINGULAR_BAND * a.G) {
            throw SingularBand("integrate: |L| entered the 0.999 G singular band at t = "
                                   + std::to_string(t),
                               std::move(traj));
        }
    };

    check_band(0.0);
    push_sample(0.0);

    const long steps = std::lround(t_end / dt);
    ReducedState y{a.l, a.g, a.L};
    for (long k = 1; k <= steps; ++k) {
        if (method == IntegrationMethod::rk4) {
            const ReducedRates k1 = reduced_rhs(w, y, a.G);
            const ReducedRates k2 = reduced_rhs(
                w, {y.l + 0.5 * dt * k1.l, y.g + 0.5 * dt * k1.g, y.L + 0.5 * dt * k1.L}, a.G);
            const ReducedRates k3 = reduced_rhs(
                w, {y.l + 0.5 * dt * k2.l, y.g + 0.5 * dt * k2.g, y.L + 0.5 * dt * k2.L}, a.G);
            const ReducedRates k4 = reduced_rhs(
                w, {y.l + dt * k3.l, y.g + dt * k3.g, y.L + dt * k3.L}, a.G);
            y.l += dt / 6.0 * (k1.l + 2.0 * k2.l + 2.0 * k3.l + k4.l);
            y.g += dt / 6.0 * (k1.g + 2.0 * k2.g + 2.0 * k3.g + k4.g);
            y.L += dt / 6.0 * (k1.L + 2.0 * k2.L + 2.0 * k3.L + k4.L);
        } else {
            ReducedState mid = y;
            for (int it = 0; it < 50; ++it) {
                const ReducedRates f = reduced_rhs(w, mid, a.G);
                const ReducedState next{y.l + 0.5 * dt * f.l, y.g + 0.5 * dt * f.g,
                                        y.L + 0.5 * dt * f.L};
                const double delta = std::abs(next.l - mid.l) + std::abs(next.g - mid.g)
                                   + std::abs(next.L - mid.L);
                mid = next;
                if (delta < 1e-15) break;
            }
            y = {2.0 * mid.l - y.l, 2.0 * mid.g - y.g, 2.0 * mid.L - y.L};
        }
        a.l = y.l;
        a.g = y.g;
        a.L = y.L;
        check_band(static_cast<double>(k) * dt);
        push_sample(static_cast<double>(k) * dt);
    }
    return traj;
}

std::vector<std::pair<double, Vec3>> euler_oracle(const HamiltonianSpec& spec, const Vec3& m0,
                                                  double t_end, double dt) {
    spec.validate();
    if (!(m0.norm() > 0.0)) throw InvalidState("euler_oracle: zero initial momentum");
    if (!(dt > 0.0) || !(t_end >= 0.0)) throw InvalidState("euler_oracle: dt > 0, t_end >= 0");
    const Mat3 w = inverse(spec.inertia.m);
    const auto f = [&](const Vec3& m) { return cross(m, w * m); };

    std::vector<std::pair<double, Vec3>> out;
    Vec3 m = m0;
    out.emplace_back(0.0, m);
    const long steps = std::lround(t_end / dt);
    for (long k = 1; k <= steps; ++k) {
        const Vec3 k1 = f(m);
        const Vec3 k2 = f(m + k1 * (0.5 * dt));
        const Vec3 k3 = f(m + k2 * (0.5 * dt));
        const Vec3 k4 = f(m + k3 * dt);
        m += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0);
        out.emplace_back(static_cast<double>(k) * dt, m);
    }
    return out;
}

}  // namespace andoyer
