#include "isodyn/radiation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "isodyn/errors.hpp"
#include "isodyn/quadrature.hpp"

namespace isodyn {

namespace {

void check_unit(const Vec3& n) {
    if (std::abs(dot(n, n) - 1.0) > 1e-9) {
        throw InvalidArgument("direction vector must have unit norm");
    }
}

void check_subluminal(const Vec3& v_hat) {
    if (!(dot(v_hat, v_hat) < 1.0)) {
        throw InvalidArgument("kinematic state requires |v_hat| < 1");
    }
}

void check_orbit(const OrbitConfig& orbit) {
    if (!(orbit.mass > 0.0)) throw InvalidArgument("orbit mass must be positive");
    if (!(orbit.radius > 0.0)) throw InvalidArgument("orbit radius must be positive");
    if (!(orbit.v_hat > 0.0 && orbit.v_hat < 1.0)) {
        throw InvalidArgument("orbit v_hat must lie in (0, 1)");
    }
}

} // namespace

double energy_density(const FieldSample& sample, double g2, const PhysicalConstants& consts) {
    if (!(g2 > 0.0)) throw InvalidArgument("energy_density requires g2 > 0");
    double s = 0.0;
    for (int m = 0; m < sample.D; ++m) {
        const std::size_t mm = static_cast<std::size_t>(m);
        s += dot(sample.e[mm], sample.e[mm]) + dot(sample.b[mm], sample.b[mm]);
    }
    const double c4 = consts.c * consts.c * consts.c * consts.c;
    return s * c4 / (8.0 * g2 * consts.G);
}

Vec3 poynting(const FieldSample& sample, double g2, const PhysicalConstants& consts) {
    if (!(g2 > 0.0)) throw InvalidArgument("poynting requires g2 > 0");
    Vec3 s;
    for (int m = 0; m < sample.D; ++m) {
        const std::size_t mm = static_cast<std::size_t>(m);
        s += cross(sample.e[mm], sample.b[mm]);
    }
    const double c5 = consts.c * consts.c * consts.c * consts.c * consts.c;
    return s * (c5 / (4.0 * g2 * consts.G));
}

double angular_power(double m, const KinematicState& kin, const Vec3& n,
                     const PhysicalConstants& consts) {
    check_unit(n);
    check_subluminal(kin.v_hat);
    const Vec3 num = cross(n, cross(n - kin.v_hat, kin.a_hat));
    const double denom = 1.0 - dot(n, kin.v_hat);
    const double d5 = denom * denom * denom * denom * denom;
    return consts.G / consts.c * m * m * dot(num, num) / d5;
}

double larmor_power(double m, const KinematicState& kin, const PhysicalConstants& consts) {
    check_subluminal(kin.v_hat);
    const Vec3 va = cross(kin.v_hat, kin.a_hat);
    const double num = dot(kin.a_hat, kin.a_hat) - dot(va, va);
    const double g = 1.0 - dot(kin.v_hat, kin.v_hat);
    return 8.0 * std::numbers::pi / 3.0 * consts.G / consts.c * m * m * num / (g * g * g);
}

double circular_orbit_power(const OrbitConfig& orbit, const PhysicalConstants& consts) {
    check_orbit(orbit);
    const double v2 = orbit.v_hat * orbit.v_hat;
    const double g = 1.0 - v2;
    return 8.0 * std::numbers::pi / 3.0 * consts.G * orbit.mass * orbit.mass * consts.c /
           (orbit.radius * orbit.radius) * v2 * v2 / (g * g);
}

FluxResult flux_sphere_integral(const InnerVector& k, const Trajectory& traj, double t, double R,
                                double g2_over_4pi, const PhysicalConstants& consts,
                                int quadrature_order, const Vec3& center) {
    if (!(R > 0.0)) throw InvalidArgument("flux sphere radius must be positive");

    // The source must stay strictly inside the sphere over the retardation
    // window reaching back at most 2R/(c - v_max) before t.
    const double window = 2.0 * R / (consts.c - traj.max_speed());
    const int probes = 64;
    for (int i = 0; i <= probes; ++i) {
        const double tp = t - window * (static_cast<double>(i) / probes);
        if (tp < traj.t_min() || tp > traj.t_max()) continue;
        if (norm(traj.position(tp) - center) >= R) {
            throw InvalidArgument("flux sphere intersects the source worldline");
        }
    }

    auto evaluate = [&](const Vec3& n) {
        const FourVector x(consts.c * t, center + R * n);
        const FieldSample s = field_components(k, traj, x, g2_over_4pi, consts);
        Vec3 eb;
        for (int m = 0; m < s.D; ++m) {
            const std::size_t mm = static_cast<std::size_t>(m);
            eb += cross(s.e[mm], s.b[mm]);
        }
        return dot(eb, n);
    };

    const double c5 = consts.c * consts.c * consts.c * consts.c * consts.c;
    const double pref = c5 / consts.G * R * R;

    FluxResult res;
    int order = std::max(64, quadrature_order);
    double prev = pref * integrate_sphere(evaluate, order, 2 * order);
    for (;;) {
        const int next_order = 2 * order;
        const double cur = pref * integrate_sphere(evaluate, next_order, 2 * next_order);
        const double scale = std::max({std::abs(cur), std::abs(prev), 1e-300});
        const double change = std::abs(cur - prev) / scale;
        if (change < 1e-8) {
            res.power = cur;
            res.theta_order = next_order;
            res.phi_order = 2 * next_order;
            res.relative_change = change;
            return res;
        }
        if (next_order > 2048) {
            throw NoConvergence("flux sphere quadrature did not reach 1e-8 relative change");
        }
        prev = cur;
        order = next_order;
    }
}

std::vector<DecaySample> binary_decay(const OrbitConfig& orbit, double companion_mass,
                                      double duration, double dt,
                                      const PhysicalConstants& consts,
                                      double power_scale, double contact_rho) {
    check_orbit(orbit);
    if (!(companion_mass > 0.0)) throw InvalidArgument("companion mass must be positive");
    if (!(duration >= 0.0)) throw InvalidArgument("decay duration must be non-negative");
    if (!(dt > 0.0)) throw InvalidArgument("decay time step must be positive");
    if (power_scale < 0.0) throw InvalidArgument("power_scale must be non-negative");

    const double m1 = orbit.mass;
    const double m2 = companion_mass;
    const double M = m1 + m2;

    auto total_power = [&](double rho) {
        const double omega = std::sqrt(consts.G * M / (rho * rho * rho));
        double p = 0.0;
        const double masses[2] = {m1, m2};
        const double radii[2] = {rho * m2 / M, rho * m1 / M};
        for (int i = 0; i < 2; ++i) {
            const double vh = omega * radii[i] / consts.c;
            if (vh == 0.0) continue;
            if (!(vh < 1.0)) throw NumericFailure("binary decay reached relativistic speeds");
            p += circular_orbit_power({masses[i], radii[i], vh}, consts);
        }
        return power_scale * p;
    };

    auto drho_dt = [&](double rho) {
        // E = -G m1 m2 / (2 rho), dE/dt = -P  =>  drho/dt = -2 rho^2 P / (G m1 m2)
        return -2.0 * rho * rho * total_power(rho) / (consts.G * m1 * m2);
    };

    std::vector<DecaySample> series;
    const auto emit = [&](double t, double rho) {
        series.push_back({t, rho, -consts.G * m1 * m2 / (2.0 * rho), total_power(rho)});
    };

    double rho = orbit.radius;
    double t = 0.0;
    emit(t, rho);
    const long steps = static_cast<long>(std::ceil(duration / dt - 1e-12));
    for (long s = 0; s < steps; ++s) {
        const double h = std::min(dt, duration - t);
        // Heun step (explicit trapezoid), second order in h.
        const double k1 = drho_dt(rho);
        const double rho_pred = rho + h * k1;
        if (!(rho_pred > contact_rho)) {
            throw NumericFailure("binary separation reached the contact threshold at t = " +
                                 std::to_string(t + h) + " s");
        }
        const double k2 = drho_dt(rho_pred);
        rho += 0.5 * h * (k1 + k2);
        t += h;
        if (!(rho > contact_rho)) {
            throw NumericFailure("binary separation reached the contact threshold at t = " +
                                 std::to_string(t) + " s");
        }
        emit(t, rho);
    }
    return series;
}

} // namespace isodyn
