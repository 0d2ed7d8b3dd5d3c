#include "isodyn/retarded_field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "isodyn/errors.hpp"

namespace isodyn {

namespace {

// Signed light-cone defect s(tau) = c (t - tau) - |x_s - y(tau)|; strictly
// decreasing in tau for subluminal motion, so the retarded root is unique.
double cone_defect(const Trajectory& traj, const Vec3& xs, double t_obs, double tau, double c) {
    return c * (t_obs - tau) - norm(xs - traj.position(tau));
}

} // namespace

RetardedGeometry retarded_time(const Trajectory& traj, const FourVector& x,
                               const PhysicalConstants& consts) {
    const double c = consts.c;
    const Vec3 xs = x.spatial();
    const double t_obs = x[0] / c;
    const double beta = traj.max_speed() / c;

    // Right bracket end: the root satisfies tau <= t_obs, and must lie inside
    // the trajectory domain.
    double hi = std::min(t_obs, traj.t_max());
    if (hi < traj.t_min()) {
        throw DomainExceeded("observation time precedes the trajectory domain");
    }
    double s_hi = cone_defect(traj, xs, t_obs, hi, c);
    if (s_hi > 0.0) {
        // Root would lie in (t_max, t_obs], outside the tabulated domain.
        throw DomainExceeded("retarded time beyond the end of the trajectory domain");
    }

    double lo = hi;
    double s_lo = s_hi;
    if (s_hi < 0.0) {
        // Exponential search backwards until the defect changes sign.  The
        // subluminal bound guarantees s -> +inf as tau -> -inf.
        double step = (norm(xs - traj.position(hi)) / c + (t_obs - hi) + 1e-30) /
                      std::max(1.0 - beta, 1e-6);
        for (int k = 0;; ++k) {
            if (k >= 128) throw NoConvergence("retarded-time bracketing failed");
            lo = hi - step;
            if (lo < traj.t_min()) {
                lo = traj.t_min();
                s_lo = cone_defect(traj, xs, t_obs, lo, c);
                if (s_lo < 0.0) {
                    throw DomainExceeded("retarded time precedes the trajectory domain");
                }
                break;
            }
            s_lo = cone_defect(traj, xs, t_obs, lo, c);
            if (s_lo >= 0.0) break;
            step *= 2.0;
        }
    }

    // Safeguarded Newton: quadratic steps clipped to the shrinking bracket.
    double tau = hi;
    double s = s_hi;
    const double scale = std::max({std::abs(t_obs), std::abs(lo), t_obs - lo});
    const double tol = kRetardedTol * std::max(scale, 1e-300);
    int iter = 0;
    while (s != 0.0 && hi - lo > tol) {
        if (++iter > kRetardedMaxIter) {
            throw NoConvergence("retarded-time solver exceeded " +
                                std::to_string(kRetardedMaxIter) + " iterations");
        }
        const Vec3 rv = xs - traj.position(tau);
        const double r = norm(rv);
        double next;
        if (r > 0.0) {
            const double ds = -c + dot(rv / r, traj.velocity(tau));
            next = tau - s / ds;
        } else {
            next = 0.5 * (lo + hi);
        }
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const double prev = tau;
        tau = next;
        s = cone_defect(traj, xs, t_obs, tau, c);
        if (s > 0.0) {
            lo = tau;
        } else {
            hi = tau;
        }
        if (std::abs(tau - prev) <= tol) break;
    }

    RetardedGeometry geo;
    geo.t_ret = tau;
    geo.r_vec = xs - traj.position(tau);
    geo.r = norm(geo.r_vec);
    if (geo.r < kWorldlineCutoff) {
        throw OnWorldline("field point within " + std::to_string(kWorldlineCutoff) +
                          " m of the source worldline (r = " + std::to_string(geo.r) + " m)");
    }
    geo.v_hat = traj.velocity(tau) / c;
    geo.a_hat = traj.acceleration(tau) / c;
    return geo;
}

Potentials lw_potential(const InnerVector& k, const Trajectory& traj, const FourVector& x,
                        double g2_over_4pi, const PhysicalConstants& consts) {
    const RetardedGeometry geo = retarded_time(traj, x, consts);
    const double kappa = geo.r - dot(geo.r_vec, geo.v_hat);
    if (kappa < 1e-15 * geo.r) {
        throw NumericFailure("Lienard-Wiechert denominator degenerate: r - r.v_hat = " +
                             std::to_string(kappa) + " m");
    }
    const double c3 = consts.c * consts.c * consts.c;
    const double pref = g2_over_4pi * consts.G / (c3 * kappa);

    Potentials pot;
    pot.D = k.dim();
    pot.a0.resize(static_cast<std::size_t>(pot.D));
    pot.a_spatial.resize(static_cast<std::size_t>(pot.D));
    for (int m = 0; m < pot.D; ++m) {
        const double cm = pref * k[m];
        pot.a0[static_cast<std::size_t>(m)] = cm;
        pot.a_spatial[static_cast<std::size_t>(m)] = cm * geo.v_hat;
    }
    return pot;
}

FieldSample field_components(const InnerVector& k, const Trajectory& traj, const FourVector& x,
                             double g2_over_4pi, const PhysicalConstants& consts) {
    const RetardedGeometry geo = retarded_time(traj, x, consts);
    const double kappa = geo.r - dot(geo.r_vec, geo.v_hat);
    if (kappa < 1e-15 * geo.r) {
        throw NumericFailure("retarded field denominator degenerate: r - r.v_hat = " +
                             std::to_string(kappa) + " m");
    }
    const Vec3 r_hat = geo.r_vec / geo.r;
    const Vec3 u = geo.r_vec - geo.r * geo.v_hat;
    const Vec3 w = geo.a_hat / consts.c; // [1/m]
    const double one_minus_v2 = 1.0 - dot(geo.v_hat, geo.v_hat);

    const Vec3 wave = cross(geo.r_vec, cross(u, w));
    const Vec3 e_dir = one_minus_v2 * u + wave;
    // b = r_hat x e with the algebraic identity r_hat x u = -r (r_hat x v_hat)
    // substituted, so a static source yields b = 0 exactly.
    const Vec3 b_dir = (-geo.r * one_minus_v2) * cross(r_hat, geo.v_hat) + cross(r_hat, wave);

    const double c3 = consts.c * consts.c * consts.c;
    const double pref = -g2_over_4pi * consts.G / (c3 * kappa * kappa * kappa);

    FieldSample out;
    out.D = k.dim();
    out.position = x;
    out.e.resize(static_cast<std::size_t>(out.D));
    out.b.resize(static_cast<std::size_t>(out.D));
    for (int m = 0; m < out.D; ++m) {
        const double cm = pref * k[m];
        out.e[static_cast<std::size_t>(m)] = cm * e_dir;
        out.b[static_cast<std::size_t>(m)] = cm * b_dir;
    }
    return out;
}

FieldTensor FieldTensor::zeros(int D) {
    FieldTensor ft;
    ft.D = D;
    ft.f = Tensor({4, 4, D});
    return ft;
}

FieldTensor field_tensor(const FieldSample& sample) {
    FieldTensor ft = FieldTensor::zeros(sample.D);
    for (int m = 0; m < sample.D; ++m) {
        const std::size_t mm = static_cast<std::size_t>(m);
        const Vec3& e = sample.e[mm];
        const Vec3& b = sample.b[mm];
        // e^i = f^{i0}; b^i = -(1/2) eps^{ijk} f^{jk}.
        ft.f(1, 0, m) = e.x;
        ft.f(2, 0, m) = e.y;
        ft.f(3, 0, m) = e.z;
        ft.f(0, 1, m) = -e.x;
        ft.f(0, 2, m) = -e.y;
        ft.f(0, 3, m) = -e.z;
        ft.f(1, 2, m) = -b.z;
        ft.f(2, 1, m) = b.z;
        ft.f(2, 3, m) = -b.x;
        ft.f(3, 2, m) = b.x;
        ft.f(3, 1, m) = -b.y;
        ft.f(1, 3, m) = b.y;
    }
    return ft;
}

namespace {

struct StencilScales {
    double h_t; ///< temporal step [s]
    double h_x; ///< spatial step [m]
    double L;   ///< normalization length [m]
};

StencilScales stencil_scales(const Trajectory& traj, const FourVector& x,
                             const PhysicalConstants& consts, const ResidualOptions& opt) {
    const RetardedGeometry geo = retarded_time(traj, x, consts);
    double T = geo.r / consts.c;
    if (traj.kind() == Trajectory::Kind::Circular && traj.omega() != 0.0) {
        T = std::min(T, 0.5 / std::abs(traj.omega()));
    }
    if (opt.time_scale > 0.0) T = opt.time_scale;
    const double L = std::min(geo.r, consts.c * T);
    return {opt.rel_step * T, opt.rel_step * L, L};
}

// Five-point first derivative, O(h^4).
double diff5(const double f[5], double h) {
    return (-f[4] + 8.0 * f[3] - 8.0 * f[1] + f[0]) / (12.0 * h);
}

// Five-point second derivative, O(h^4).
double diff5_2(const double f[5], double h) {
    return (-f[4] + 16.0 * f[3] - 30.0 * f[2] + 16.0 * f[1] - f[0]) / (12.0 * h * h);
}

// Potential components a^mu_M on the 5-point stencil along axis (0 = ct).
void stencil_fill(const InnerVector& k, const Trajectory& traj, const FourVector& x,
                  double g2_over_4pi, const PhysicalConstants& consts, int axis, double h,
                  int mu, int M, double out[5]) {
    for (int j = -2; j <= 2; ++j) {
        FourVector xx = x;
        xx[axis] += h * j;
        const Potentials p = lw_potential(k, traj, xx, g2_over_4pi, consts);
        const std::size_t mm = static_cast<std::size_t>(M);
        double v = 0.0;
        switch (mu) {
            case 0: v = p.a0[mm]; break;
            case 1: v = p.a_spatial[mm].x; break;
            case 2: v = p.a_spatial[mm].y; break;
            case 3: v = p.a_spatial[mm].z; break;
        }
        out[j + 2] = v;
    }
}

double potential_scale(const Potentials& p) {
    double amax = 0.0;
    for (int m = 0; m < p.D; ++m) {
        const std::size_t mm = static_cast<std::size_t>(m);
        amax = std::max(amax, std::abs(p.a0[mm]));
        const Vec3& a = p.a_spatial[mm];
        amax = std::max({amax, std::abs(a.x), std::abs(a.y), std::abs(a.z)});
    }
    return amax;
}

} // namespace

double check_lorentz_gauge(const InnerVector& k, const Trajectory& traj, const FourVector& x,
                           double g2_over_4pi, const PhysicalConstants& consts,
                           const ResidualOptions& opt) {
    const Potentials at_x = lw_potential(k, traj, x, g2_over_4pi, consts);
    const double amax = potential_scale(at_x);
    if (amax == 0.0) return 0.0;

    const StencilScales sc = stencil_scales(traj, x, consts, opt);
    const double h0 = consts.c * sc.h_t; // step in x^0 = c t
    double worst = 0.0;
    for (int M = 0; M < at_x.D; ++M) {
        double f[5];
        stencil_fill(k, traj, x, g2_over_4pi, consts, 0, h0, 0, M, f);
        double div = diff5(f, h0); // d_0 a^0
        for (int i = 1; i <= 3; ++i) {
            stencil_fill(k, traj, x, g2_over_4pi, consts, i, sc.h_x, i, M, f);
            div += diff5(f, sc.h_x);
        }
        worst = std::max(worst, std::abs(div));
    }
    return worst / (amax / sc.L);
}

double check_wave_equation(const InnerVector& k, const Trajectory& traj, const FourVector& x,
                           double g2_over_4pi, const PhysicalConstants& consts,
                           const ResidualOptions& opt) {
    const Potentials at_x = lw_potential(k, traj, x, g2_over_4pi, consts);
    const double amax = potential_scale(at_x);
    if (amax == 0.0) return 0.0;

    const StencilScales sc = stencil_scales(traj, x, consts, opt);
    const double h0 = consts.c * sc.h_t;
    double worst = 0.0;
    for (int M = 0; M < at_x.D; ++M) {
        for (int mu = 0; mu < 4; ++mu) {
            double f[5];
            stencil_fill(k, traj, x, g2_over_4pi, consts, 0, h0, mu, M, f);
            double box = -diff5_2(f, h0); // -d_0^2
            for (int i = 1; i <= 3; ++i) {
                stencil_fill(k, traj, x, g2_over_4pi, consts, i, sc.h_x, mu, M, f);
                box += diff5_2(f, sc.h_x);
            }
            worst = std::max(worst, std::abs(box));
        }
    }
    return worst / (amax / (sc.L * sc.L));
}

} // namespace isodyn
