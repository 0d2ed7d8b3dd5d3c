#include "isodyn/dynamics.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "isodyn/errors.hpp"

namespace isodyn {

ParticleState ParticleState::from_coordinate(const Vec3& position, const Vec3& velocity,
                                             double t, const PhysicalConstants& consts) {
    const double v = norm(velocity);
    if (!(v < consts.c)) throw InvalidArgument("particle velocity must be subluminal");
    const double gamma = 1.0 / std::sqrt(1.0 - (v / consts.c) * (v / consts.c));
    ParticleState st;
    st.position = FourVector(consts.c * t, position);
    st.velocity = FourVector(gamma * consts.c, gamma * velocity);
    st.proper_time = 0.0;
    return st;
}

double ParticleState::coordinate_time(const PhysicalConstants& consts) const {
    return position[0] / consts.c;
}

Vec3 ParticleState::coordinate_velocity(const PhysicalConstants& consts) const {
    return velocity.spatial() * (consts.c / velocity[0]);
}

double ParticleState::gamma(const PhysicalConstants& consts) const {
    return velocity[0] / consts.c;
}

FourVector lorentz_like_force(const FieldTensor& f, const InnerVector& k, const FourVector& u) {
    if (f.D != k.dim()) throw InvalidArgument("field tensor / charge dimension mismatch");
    // u_beta = eta_betanu u^nu, then F_mu = eta_mualpha f^{alphabeta} K u_beta.
    FourVector out;
    for (int mu = 0; mu < 4; ++mu) {
        double s = 0.0;
        for (int nu = 0; nu < 4; ++nu) {
            const double u_low = metric_sign(nu) * u[nu];
            double fk = 0.0;
            for (int m = 0; m < f.D; ++m) fk += f.f(mu, nu, m) * k[m];
            s += fk * u_low;
        }
        out[mu] = metric_sign(mu) * s;
    }
    return out;
}

FourVector lorentz_like_accel(const FieldTensor& f, const InnerVector& charge_over_mass,
                              const FourVector& u) {
    // Raising the covariant force flips the sign twice on each diagonal metric
    // factor, so the contravariant acceleration is the bare contraction
    // a^mu = f^{munu} eta_nurho (K/m)_M u^rho.
    if (f.D != charge_over_mass.dim()) {
        throw InvalidArgument("field tensor / charge dimension mismatch");
    }
    FourVector out;
    for (int mu = 0; mu < 4; ++mu) {
        double s = 0.0;
        for (int nu = 0; nu < 4; ++nu) {
            const double u_low = metric_sign(nu) * u[nu];
            double fk = 0.0;
            for (int m = 0; m < f.D; ++m) fk += f.f(mu, nu, m) * charge_over_mass[m];
            s += fk * u_low;
        }
        out[mu] = s;
    }
    return out;
}

std::vector<MotionSample> integrate_motion(const ParticleState& initial,
                                           const ChargedParticle& particle,
                                           const FieldProvider& field, double dtau, int steps,
                                           const PhysicalConstants& consts, int output_every) {
    if (!(dtau > 0.0)) throw InvalidArgument("integrate_motion requires dtau > 0");
    if (steps < 0) throw InvalidArgument("integrate_motion requires steps >= 0");
    if (output_every < 1) throw InvalidArgument("integrate_motion requires output_every >= 1");

    const double c2 = consts.c * consts.c;
    const InnerVector& qom = particle.charge_over_mass();

    auto accel = [&](const FourVector& y, const FourVector& u) {
        return lorentz_like_accel(field(y), qom, u);
    };

    std::vector<MotionSample> out;
    out.reserve(static_cast<std::size_t>(steps / output_every) + 2);

    FourVector y = initial.position;
    FourVector u = initial.velocity;
    double tau = initial.proper_time;
    out.push_back({ParticleState{y, u, tau}, 0.0});

    for (int step = 1; step <= steps; ++step) {
        const FourVector k1y = u;
        const FourVector k1u = accel(y, u);
        const FourVector k2y = u + (0.5 * dtau) * k1u;
        const FourVector k2u = accel(y + (0.5 * dtau) * k1y, u + (0.5 * dtau) * k1u);
        const FourVector k3y = u + (0.5 * dtau) * k2u;
        const FourVector k3u = accel(y + (0.5 * dtau) * k2y, u + (0.5 * dtau) * k2u);
        const FourVector k4y = u + dtau * k3u;
        const FourVector k4u = accel(y + dtau * k3y, u + dtau * k3u);

        y += (dtau / 6.0) * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        u += (dtau / 6.0) * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        tau += dtau;

        const double drift = std::abs(minkowski_dot(u, u) + c2) / c2;
        if (drift > kMaxNormDrift) {
            throw NumericFailure("four-velocity norm drift " + std::to_string(drift) +
                                 " at step " + std::to_string(step) +
                                 "; reduce the proper-time step");
        }
        // Project back onto the mass shell, keeping the spatial part.
        const Vec3 us = u.spatial();
        u[0] = std::sqrt(c2 + dot(us, us));

        if (step % output_every == 0 || step == steps) {
            out.push_back({ParticleState{y, u, tau}, drift});
        }
    }
    return out;
}

Vec3 newton_accel(double m_src, const Vec3& r_vec, double cos_theta, double g2_over_4pi,
                  const PhysicalConstants& consts) {
    const double r = norm(r_vec);
    if (!(r > 0.0)) throw InvalidArgument("newton_accel requires a nonzero separation");
    if (!(m_src > 0.0)) throw InvalidArgument("newton_accel requires m_src > 0");
    if (std::abs(cos_theta) > 1.0) throw InvalidArgument("cos_theta must lie in [-1, 1]");
    const double mag = g2_over_4pi * consts.G * m_src * cos_theta / (r * r);
    return (mag / r) * r_vec;
}

double interaction_energy(double m1, double m2, double r, double cos_theta, double g2_over_4pi,
                          const PhysicalConstants& consts) {
    if (!(r > 0.0)) throw InvalidArgument("interaction_energy requires r > 0");
    if (!(m1 > 0.0) || !(m2 > 0.0)) throw InvalidArgument("interaction_energy requires positive masses");
    if (std::abs(cos_theta) > 1.0) throw InvalidArgument("cos_theta must lie in [-1, 1]");
    return g2_over_4pi * consts.G * m1 * m2 * cos_theta / r;
}

std::vector<SpectrumEntry> mass_spectrum(int D, int n_max, const PhysicalConstants& consts) {
    if (D < 1 || D > 8) throw InvalidArgument("mass_spectrum requires 1 <= D <= 8");
    if (n_max < 1) throw InvalidArgument("mass_spectrum requires n_max >= 1");
    double count = 1.0;
    for (int d = 0; d < D; ++d) count *= static_cast<double>(n_max) + 1.0;
    if (count > 2e7) {
        throw InvalidArgument("mass_spectrum lattice too large: (n_max+1)^D = " +
                              std::to_string(count));
    }

    // Lexicographic odometer over {0..n_max}^D; the first vector reaching a
    // given n.n is the level representative.
    std::map<long, SpectrumEntry> levels;
    std::vector<int> n(static_cast<std::size_t>(D), 0);
    for (;;) {
        int d = D - 1;
        while (d >= 0) {
            if (++n[static_cast<std::size_t>(d)] <= n_max) break;
            n[static_cast<std::size_t>(d)] = 0;
            --d;
        }
        if (d < 0) break;

        long nn = 0;
        for (int v : n) nn += static_cast<long>(v) * v;
        auto [it, inserted] = levels.try_emplace(nn);
        if (inserted) {
            it->second.n = n;
            it->second.mass = consts.m_P * std::numbers::pi * std::sqrt(static_cast<double>(nn));
            it->second.multiplicity = 1;
        } else {
            ++it->second.multiplicity;
        }
    }

    std::vector<SpectrumEntry> out;
    out.reserve(levels.size());
    for (auto& [nn, entry] : levels) out.push_back(std::move(entry));
    return out;
}

} // namespace isodyn
