#include "isodyn/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "isodyn/dynamics.hpp"
#include "isodyn/errors.hpp"
#include "isodyn/geometry.hpp"
#include "isodyn/particle.hpp"
#include "isodyn/quadrature.hpp"
#include "isodyn/radiation.hpp"
#include "isodyn/retarded_field.hpp"
#include "isodyn/scenario.hpp"
#include "isodyn/trajectory.hpp"

namespace isodyn {

namespace {

using Rng = std::mt19937_64;

double urand(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double urand(Rng& rng) { return urand(rng, -1.0, 1.0); }

Vec3 vrand(Rng& rng, double s = 1.0) {
    return {s * urand(rng), s * urand(rng), s * urand(rng)};
}

std::string strf(const char* format, ...) {
    char buf[256];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

CheckResult result(std::string name, double worst, double tol, std::string detail) {
    CheckResult r;
    r.name = std::move(name);
    r.worst = worst;
    r.tolerance = tol;
    r.passed = std::isfinite(worst) && worst <= tol;
    r.detail = std::move(detail);
    return r;
}

void fill_random(Tensor& t, Rng& rng) {
    for (double& v : t.data()) v = urand(rng);
}

void zero(Tensor& t) { std::fill(t.data().begin(), t.data().end(), 0.0); }

// Flat accessors matching the validator index arithmetic: `a` is the
// flattened product of all leading extents.
double& at2(Tensor& t, int a, int m, int n, int D) {
    return t.data()[static_cast<std::size_t>((a * D + m) * D + n)];
}

double& at3(Tensor& t, int a, int m, int r, int s, int D) {
    return t.data()[static_cast<std::size_t>(((a * D + m) * D + r) * D + s)];
}

// Sets the last diagonal entry so the ascending-M fold of sum_M t[..][M][M]
// is exactly +0.0, the same order trace_violation uses.
void balance_rank2(Tensor& t, int lead, int D) {
    for (int a = 0; a < lead; ++a) {
        double acc = 0.0;
        for (int m = 0; m + 1 < D; ++m) acc += at2(t, a, m, m, D);
        at2(t, a, D - 1, D - 1, D) = -acc;
    }
}

// (R, S) symmetrization of the trailing two indices; lead includes M.
void symmetrize_last_two(Tensor& t, int lead, int D) {
    for (int a = 0; a < lead; ++a) {
        for (int r = 0; r < D; ++r) {
            for (int s = r + 1; s < D; ++s) at2(t, a, s, r, D) = at2(t, a, r, s, D);
        }
    }
}

// Balances sum_M t[..][M][M][S] = +0.0 for every S, writing the (D-1, S)
// entry and its symmetric mirror; lead excludes M.
void balance_rank3(Tensor& t, int lead, int D) {
    for (int a = 0; a < lead; ++a) {
        for (int s = 0; s < D; ++s) {
            double acc = 0.0;
            for (int m = 0; m + 1 < D; ++m) acc += at3(t, a, m, m, s, D);
            at3(t, a, D - 1, D - 1, s, D) = -acc;
            at3(t, a, D - 1, s, D - 1, D) = -acc;
        }
    }
}

double max_abs3(const Tensor& t0, const Tensor& t1, const Tensor& t2) {
    return std::max({t0.max_abs(), t1.max_abs(), t2.max_abs()});
}

double rel_scale(double value, double floor_scale) { return std::max(value, floor_scale); }

} // namespace

GaugeParameterCoefficients random_constrained_parameter(Rng& rng, int D) {
    GaugeParameterCoefficients e = GaugeParameterCoefficients::zeros(D);
    fill_random(e.eps0, rng);
    fill_random(e.eps1, rng);
    fill_random(e.eps2, rng);
    balance_rank2(e.eps1, 1, D);
    symmetrize_last_two(e.eps2, D, D);
    balance_rank3(e.eps2, 1, D);
    return e;
}

GaugeParameterDerivatives random_constrained_parameter_derivatives(Rng& rng, int D) {
    GaugeParameterDerivatives de = GaugeParameterDerivatives::zeros(D);
    fill_random(de.d0, rng);
    fill_random(de.d1, rng);
    fill_random(de.d2, rng);
    balance_rank2(de.d1, 4, D);
    symmetrize_last_two(de.d2, 4 * D, D);
    balance_rank3(de.d2, 4, D);
    return de;
}

GaugeCoefficients random_constrained_gauge(Rng& rng, int D) {
    GaugeCoefficients a = GaugeCoefficients::zeros(D);
    fill_random(a.a0, rng);
    fill_random(a.a1, rng);
    fill_random(a.a2, rng);
    balance_rank2(a.a1, 4, D);
    symmetrize_last_two(a.a2, 4 * D, D);
    balance_rank3(a.a2, 4, D);
    return a;
}

GaugeDerivatives random_constrained_gauge_derivatives(Rng& rng, int D) {
    GaugeDerivatives da = GaugeDerivatives::zeros(D);
    fill_random(da.d0, rng);
    fill_random(da.d1, rng);
    fill_random(da.d2, rng);
    balance_rank2(da.d1, 16, D);
    symmetrize_last_two(da.d2, 16 * D, D);
    balance_rank3(da.d2, 16, D);
    return da;
}

FieldStrengthCoefficients random_constrained_field_strength(Rng& rng, int D) {
    FieldStrengthCoefficients f = FieldStrengthCoefficients::zeros(D);
    fill_random(f.f0, rng);
    fill_random(f.f1, rng);
    fill_random(f.f2, rng);
    balance_rank2(f.f1, kPairCount, D);
    symmetrize_last_two(f.f2, kPairCount * D, D);
    balance_rank3(f.f2, kPairCount, D);
    return f;
}

GaugeDerivatives vary_gauge_derivatives(const GaugeDerivatives& da, const GaugeCoefficients& a,
                                        const GaugeParameterCoefficients& eps,
                                        const GaugeParameterDerivatives& deps) {
    if (da.D != a.D || da.D != eps.D || da.D != deps.D) {
        throw InvalidArgument("vary_gauge_derivatives: dimension mismatch");
    }
    const int D = da.D;
    GaugeDerivatives out = GaugeDerivatives::zeros(D);
    for (int lam = 0; lam < 4; ++lam) {
        for (int mu = 0; mu < 4; ++mu) {
            for (int M = 0; M < D; ++M) {
                double v0 = 0.0;
                for (int N = 0; N < D; ++N) {
                    v0 += da.d0(lam, mu, N) * eps.eps1(M, N) +
                          a.a0(mu, N) * deps.d1(lam, M, N) -
                          deps.d0(lam, N) * a.a1(mu, M, N) -
                          eps.eps0(N) * da.d1(lam, mu, M, N);
                }
                out.d0(lam, mu, M) = v0;

                for (int R = 0; R < D; ++R) {
                    double v1 = 0.0;
                    for (int N = 0; N < D; ++N) {
                        v1 += da.d1(lam, mu, N, R) * eps.eps1(M, N) +
                              a.a1(mu, N, R) * deps.d1(lam, M, N) +
                              2.0 * da.d0(lam, mu, N) * eps.eps2(M, N, R) +
                              2.0 * a.a0(mu, N) * deps.d2(lam, M, N, R) -
                              deps.d1(lam, N, R) * a.a1(mu, M, N) -
                              eps.eps1(N, R) * da.d1(lam, mu, M, N) -
                              2.0 * deps.d0(lam, N) * a.a2(mu, M, N, R) -
                              2.0 * eps.eps0(N) * da.d2(lam, mu, M, N, R);
                    }
                    out.d1(lam, mu, M, R) = v1;

                    for (int S = R; S < D; ++S) {
                        double v2 = 0.0;
                        for (int N = 0; N < D; ++N) {
                            v2 += da.d2(lam, mu, N, R, S) * eps.eps1(M, N) +
                                  a.a2(mu, N, R, S) * deps.d1(lam, M, N) +
                                  da.d1(lam, mu, N, R) * eps.eps2(M, N, S) +
                                  a.a1(mu, N, R) * deps.d2(lam, M, N, S) +
                                  da.d1(lam, mu, N, S) * eps.eps2(M, N, R) +
                                  a.a1(mu, N, S) * deps.d2(lam, M, N, R) -
                                  deps.d2(lam, N, R, S) * a.a1(mu, M, N) -
                                  eps.eps2(N, R, S) * da.d1(lam, mu, M, N) -
                                  deps.d1(lam, N, R) * a.a2(mu, M, N, S) -
                                  eps.eps1(N, R) * da.d2(lam, mu, M, N, S) -
                                  deps.d1(lam, N, S) * a.a2(mu, M, N, R) -
                                  eps.eps1(N, S) * da.d2(lam, mu, M, N, R);
                        }
                        out.d2(lam, mu, M, R, S) = v2;
                        out.d2(lam, mu, M, S, R) = v2;
                    }
                }
            }
        }
    }
    return out;
}

namespace {

// One mismatch sample: delta f by the adjoint rule versus the exact central
// difference of the bilinear composition map along the induced variation.
void variation_sample(const GaugeCoefficients& a, const GaugeDerivatives& da,
                      const GaugeParameterCoefficients& eps,
                      const GaugeParameterDerivatives& deps, MismatchStats& stats) {
    const GaugeCoefficients delta_a = gauge_vary_gauge(a, eps, deps);
    const GaugeDerivatives delta_d = vary_gauge_derivatives(da, a, eps, deps);
    const FieldStrengthCoefficients f = field_strength_from_gauge(a, da);
    const FieldStrengthCoefficients side1 = gauge_vary_field_strength(f, eps);
    const FieldStrengthCoefficients fp = field_strength_from_gauge(a + delta_a, da + delta_d);
    const FieldStrengthCoefficients fm = field_strength_from_gauge(a - delta_a, da - delta_d);
    const FieldStrengthCoefficients side2 = 0.5 * (fp - fm);

    const double scale = rel_scale(std::max(max_abs3(side1.f0, side1.f1, side1.f2),
                                            max_abs3(side2.f0, side2.f1, side2.f2)),
                                   1e-30);
    const FieldStrengthCoefficients diff = side1 - side2;
    stats.worst_rel = std::max(stats.worst_rel, max_abs3(diff.f0, diff.f1, diff.f2) / scale);

    const double tr =
        std::max({trace_violation(f) / rel_scale(max_abs3(f.f0, f.f1, f.f2), 1.0),
                  trace_violation(delta_a) /
                      rel_scale(max_abs3(delta_a.a0, delta_a.a1, delta_a.a2), 1.0),
                  trace_violation(side1) / rel_scale(max_abs3(side1.f0, side1.f1, side1.f2), 1.0),
                  trace_violation(side2) / rel_scale(max_abs3(side2.f0, side2.f1, side2.f2), 1.0),
                  symmetry_violation(side1) /
                      rel_scale(max_abs3(side1.f0, side1.f1, side1.f2), 1.0)});
    stats.worst_trace = std::max(stats.worst_trace, tr);
    ++stats.samples;
}

} // namespace

MismatchStats gauge_variation_mismatch(std::uint64_t seed, int D, int n_sets) {
    Rng rng(seed);
    MismatchStats stats;
    for (int i = 0; i < n_sets; ++i) {
        GaugeCoefficients a = random_constrained_gauge(rng, D);
        GaugeDerivatives da = random_constrained_gauge_derivatives(rng, D);
        GaugeParameterCoefficients eps = random_constrained_parameter(rng, D);
        GaugeParameterDerivatives deps = random_constrained_parameter_derivatives(rng, D);
        // Truncation-exact subspace: quadratic coefficients absent entirely.
        zero(a.a2);
        zero(da.d2);
        zero(eps.eps2);
        zero(deps.d2);
        variation_sample(a, da, eps, deps, stats);
    }
    return stats;
}

MismatchStats gauge_variation_mismatch_second_order(std::uint64_t seed, int D, int n_sets) {
    Rng rng(seed);
    MismatchStats stats;
    for (int i = 0; i < n_sets; ++i) {
        GaugeCoefficients a = random_constrained_gauge(rng, D);
        GaugeDerivatives da = random_constrained_gauge_derivatives(rng, D);
        GaugeParameterCoefficients eps = random_constrained_parameter(rng, D);
        GaugeParameterDerivatives deps = random_constrained_parameter_derivatives(rng, D);
        if (i % 2 == 0) {
            // Full quadratic field; parameter restricted so the discarded
            // cubic commutator terms vanish at the point (eps0, eps2 = 0).
            zero(eps.eps0);
            zero(eps.eps2);
            zero(deps.d2);
        } else {
            // Full parameter; field restricted (a2 = 0) for the same reason.
            zero(a.a2);
            zero(da.d2);
        }
        variation_sample(a, da, eps, deps, stats);
    }
    return stats;
}

namespace {

// Degree <= 2 polynomial in X: c0 + sum_R c1[R] X_R + sum_RS c2[R][S] X_R X_S.
struct Poly2 {
    double c0 = 0.0;
    std::vector<double> c1;
    std::vector<double> c2; // row-major D x D, no symmetry assumed

    explicit Poly2(int D) : c1(static_cast<std::size_t>(D), 0.0),
                            c2(static_cast<std::size_t>(D * D), 0.0) {}

    double eval(const std::vector<double>& x) const {
        const int D = static_cast<int>(c1.size());
        double v = c0;
        for (int r = 0; r < D; ++r) {
            v += c1[static_cast<std::size_t>(r)] * x[static_cast<std::size_t>(r)];
            for (int s = 0; s < D; ++s) {
                v += c2[static_cast<std::size_t>(r * D + s)] * x[static_cast<std::size_t>(r)] *
                     x[static_cast<std::size_t>(s)];
            }
        }
        return v;
    }
};

} // namespace

double taylor_reconstruction_mismatch(std::uint64_t seed, int D, int n_sets, int n_x_samples) {
    Rng rng(seed);
    double worst = 0.0;
    for (int set = 0; set < n_sets; ++set) {
        const GaugeCoefficients a = random_constrained_gauge(rng, D);
        const GaugeDerivatives da = random_constrained_gauge_derivatives(rng, D);
        const FieldStrengthCoefficients f = field_strength_from_gauge(a, da);

        for (int p = 0; p < kPairCount; ++p) {
            int mu = 0;
            int nu = 0;
            pair_members(p, mu, nu);
            for (int M = 0; M < D; ++M) {
                // Independent assembly: generic monomial products of
                //   A_mu^N(X) = a0 + a1 X + a2 X X      (value polynomial)
                //   grad_N A_nu^M(X) = a1 + 2 a2 X      (inner gradient)
                // truncated at degree 2, plus the derivative part.
                Poly2 g(D);
                g.c0 = da.d0(mu, nu, M) - da.d0(nu, mu, M);
                for (int r = 0; r < D; ++r) {
                    g.c1[static_cast<std::size_t>(r)] =
                        da.d1(mu, nu, M, r) - da.d1(nu, mu, M, r);
                    for (int s = 0; s < D; ++s) {
                        g.c2[static_cast<std::size_t>(r * D + s)] =
                            da.d2(mu, nu, M, r, s) - da.d2(nu, mu, M, r, s);
                    }
                }
                for (int N = 0; N < D; ++N) {
                    for (int term = 0; term < 2; ++term) {
                        const int alpha = term == 0 ? mu : nu;
                        const int beta = term == 0 ? nu : mu;
                        const double sign = term == 0 ? 1.0 : -1.0;
                        // (A_alpha^N) . (grad_N A_beta^M), degree <= 2 kept.
                        g.c0 += sign * a.a0(alpha, N) * a.a1(beta, M, N);
                        for (int r = 0; r < D; ++r) {
                            g.c1[static_cast<std::size_t>(r)] +=
                                sign * (a.a0(alpha, N) * 2.0 * a.a2(beta, M, N, r) +
                                        a.a1(alpha, N, r) * a.a1(beta, M, N));
                            for (int s = 0; s < D; ++s) {
                                g.c2[static_cast<std::size_t>(r * D + s)] +=
                                    sign * (a.a1(alpha, N, r) * 2.0 * a.a2(beta, M, N, s) +
                                            a.a2(alpha, N, r, s) * a.a1(beta, M, N));
                            }
                        }
                    }
                }

                Rng xrng(seed ^ (0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(
                                                              (set * kPairCount + p) * D + M)));
                for (int k = 0; k < n_x_samples; ++k) {
                    std::vector<double> x(static_cast<std::size_t>(D));
                    for (double& xi : x) xi = urand(xrng, -0.5, 0.5);
                    double taylor = f.f0(p, M);
                    for (int r = 0; r < D; ++r) {
                        taylor += f.f1(p, M, r) * x[static_cast<std::size_t>(r)];
                        for (int s = 0; s < D; ++s) {
                            taylor += f.f2(p, M, r, s) * x[static_cast<std::size_t>(r)] *
                                      x[static_cast<std::size_t>(s)];
                        }
                    }
                    const double oracle = g.eval(x);
                    const double scale = rel_scale(std::max(std::abs(oracle), std::abs(taylor)),
                                                   1e-3);
                    worst = std::max(worst, std::abs(taylor - oracle) / scale);
                }
            }
        }
    }
    return worst;
}

double lagrangian_quadrature_mismatch(std::uint64_t seed, int D, double g2_over_4pi,
                                      const PhysicalConstants& consts, int n_sets) {
    Rng rng(seed);
    const double g2 = 4.0 * std::acos(-1.0) * g2_over_4pi;
    const GaussLegendreRule rule = gauss_legendre(3);
    const double l = consts.l_P;
    double worst = 0.0;

    for (int set = 0; set < n_sets; ++set) {
        const FieldStrengthCoefficients f = random_constrained_field_strength(rng, D);
        const double lib = effective_lagrangian(f, g2, consts);

        // Tensor-product Gauss-Legendre over the centered cube of edge l;
        // integrand is the squared field strength with its own degree > 2
        // part discarded, the truncation the closed form integrates.
        std::vector<int> idx(static_cast<std::size_t>(D), 0);
        double integral = 0.0;
        bool done = false;
        while (!done) {
            double weight = 1.0;
            std::vector<double> x(static_cast<std::size_t>(D));
            for (int dI = 0; dI < D; ++dI) {
                const std::size_t node = static_cast<std::size_t>(idx[static_cast<std::size_t>(dI)]);
                weight *= rule.weights[node] * (l / 2.0);
                x[static_cast<std::size_t>(dI)] = rule.nodes[node] * (l / 2.0);
            }
            double val = 0.0;
            for (int p = 0; p < kPairCount; ++p) {
                const double sign = pair_metric_sign(p);
                for (int M = 0; M < D; ++M) {
                    const double v0 = f.f0(p, M);
                    double v1 = 0.0;
                    double v2 = 0.0;
                    for (int r = 0; r < D; ++r) {
                        v1 += f.f1(p, M, r) * x[static_cast<std::size_t>(r)];
                        for (int s = 0; s < D; ++s) {
                            v2 += f.f2(p, M, r, s) * x[static_cast<std::size_t>(r)] *
                                  x[static_cast<std::size_t>(s)];
                        }
                    }
                    val += sign * (v0 * v0 + 2.0 * v0 * v1 + v1 * v1 + 2.0 * v0 * v2);
                }
            }
            integral += weight * val;

            done = true;
            for (int dI = 0; dI < D; ++dI) {
                int& k = idx[static_cast<std::size_t>(dI)];
                if (++k < static_cast<int>(rule.nodes.size())) {
                    done = false;
                    break;
                }
                k = 0;
            }
        }

        double vol = 1.0;
        for (int dI = 0; dI < D; ++dI) vol *= l;
        const double c4 = consts.c * consts.c * consts.c * consts.c;
        const double oracle = -2.0 * (integral / vol) * c4 / (4.0 * g2 * consts.G);
        worst = std::max(worst, std::abs(lib - oracle) /
                                    rel_scale(std::max(std::abs(lib), std::abs(oracle)), 1e-30));
    }
    return worst;
}

double larmor_closure_mismatch(std::uint64_t seed, int n_states, double v_max,
                               const PhysicalConstants& consts) {
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < n_states; ++i) {
        KinematicState kin;
        Vec3 dir = vrand(rng);
        if (norm(dir) < 1e-3) dir = {1.0, 0.0, 0.0};
        kin.v_hat = hat(dir) * urand(rng, 0.0, v_max);
        kin.a_hat = vrand(rng, 2.0);
        if (norm(kin.a_hat) < 0.3) kin.a_hat.x += 1.0;
        const double m = urand(rng, 0.5, 5.0);

        const double total = larmor_power(m, kin, consts);
        const double quad = integrate_sphere(
            [&](const Vec3& n) { return angular_power(m, kin, n, consts); }, 48, 96);
        worst = std::max(worst, std::abs(quad - total) / total);
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Suite checks
// ---------------------------------------------------------------------------

namespace {

CheckResult check_minkowski_bilinearity(Rng& rng) {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const FourVector u{urand(rng), urand(rng), urand(rng), urand(rng)};
        const FourVector v{urand(rng), urand(rng), urand(rng), urand(rng)};
        const FourVector w{urand(rng), urand(rng), urand(rng), urand(rng)};
        const double alpha = urand(rng, -2.0, 2.0);
        const double beta = urand(rng, -2.0, 2.0);
        const double sym = std::abs(minkowski_dot(u, v) - minkowski_dot(v, u));
        const double lin = std::abs(minkowski_dot(alpha * u + beta * v, w) -
                                    (alpha * minkowski_dot(u, w) + beta * minkowski_dot(v, w)));
        const double scale = rel_scale(std::abs(alpha) + std::abs(beta), 1.0) * 16.0;
        worst = std::max(worst, std::max(sym, lin) / scale);
    }
    return result("minkowski_bilinearity", worst, 1e-14,
                  "symmetry and bilinearity on 50 random vector triples");
}

CheckResult check_planck_identity(const PhysicalConstants& consts) {
    const double lhs = consts.hbar / consts.l_P;
    const double rhs = consts.m_P * consts.c;
    const double worst = std::abs(lhs - rhs) / rhs;
    return result("planck_identity", worst, 1e-14, "hbar / l_P == m_P c");
}

CheckResult check_planck_reference_values() {
    const PhysicalConstants consts = codata_constants();
    const double worst = std::max(std::abs(consts.m_P - 2.176434e-8) / 2.176434e-8,
                                  std::abs(consts.l_P - 1.616255e-35) / 1.616255e-35);
    return result("planck_reference_values", worst, 1e-5,
                  "m_P, l_P from CODATA inputs against published values");
}

CheckResult check_mass_lock_charges(Rng& rng, int D, const PhysicalConstants& consts) {
    double worst = 0.0;
    InnerVector dir(D);
    for (int m = 0; m < D; ++m) dir[m] = urand(rng);
    if (dir.norm() == 0.0) dir[0] = 1.0;
    const ChargedParticle base = ChargedParticle::mass_locked(1.0, dir, consts);
    for (int decade = -3; decade <= 3; ++decade) {
        const double mass = std::pow(10.0, decade);
        const ChargedParticle p = ChargedParticle::mass_locked(mass, dir, consts);
        worst = std::max(worst, p.mass_lock_residual(consts));
        for (int m = 0; m < D; ++m) {
            if (p.charge_over_mass()[m] != base.charge_over_mass()[m]) worst = 1.0;
        }
    }
    return result("mass_lock_charges", worst, 1e-12,
                  "|K| = m c and bitwise mass-independent K/m over 6 decades");
}

CheckResult check_inner_angle_bounds(Rng& rng) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const int D = 1 + static_cast<int>(urand(rng, 0.0, 7.999));
        InnerVector k(D);
        InnerVector q(D);
        for (int m = 0; m < D; ++m) {
            k[m] = urand(rng, -5.0, 5.0);
            q[m] = urand(rng, -5.0, 5.0);
        }
        if (k.norm() == 0.0) k[0] = 1.0;
        if (q.norm() == 0.0) q[0] = 1.0;
        const InnerAngle kq = inner_angle_product(k, q);
        const InnerAngle qk = inner_angle_product(q, k);
        worst = std::max(worst, std::abs(kq.cos_theta) - 1.0);
        worst = std::max(worst, std::abs(kq.dot - qk.dot));
    }
    return result("inner_angle_bounds", worst, 1e-12,
                  "cos(theta) within [-1, 1] and symmetric dot, 100 random pairs");
}

CheckResult check_gauss_legendre_exactness() {
    double worst = 0.0;
    for (const int n : {4, 16, 64}) {
        const GaussLegendreRule rule = gauss_legendre(n);
        double wsum = 0.0;
        for (double w : rule.weights) wsum += w;
        worst = std::max(worst, std::abs(wsum - 2.0));
        for (int k = 1; k <= 2 * n - 1; k = (k < 8 ? k + 1 : k * 2 + 1)) {
            const int deg = std::min(k, 2 * n - 1);
            double quad = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                quad += rule.weights[i] * std::pow(rule.nodes[i], deg);
            }
            const double exact = deg % 2 == 0 ? 2.0 / (deg + 1) : 0.0;
            worst = std::max(worst, std::abs(quad - exact));
        }
    }
    return result("gauss_legendre_exactness", worst, 1e-13,
                  "monomials through degree 2n-1 at n = 4, 16, 64");
}

CheckResult check_sphere_quadrature_exactness() {
    const double pi = std::acos(-1.0);
    double worst = 0.0;
    const auto run = [&](const std::function<double(const Vec3&)>& f, double exact) {
        const double quad = integrate_sphere(f, 24, 48);
        worst = std::max(worst, std::abs(quad - exact) / (4.0 * pi));
    };
    run([](const Vec3&) { return 1.0; }, 4.0 * pi);
    run([](const Vec3& n) { return n.z * n.z; }, 4.0 * pi / 3.0);
    run([](const Vec3& n) { return n.x * n.y; }, 0.0);
    run([](const Vec3& n) { return 3.0 * n.z * n.z - 1.0; }, 0.0);
    run([](const Vec3& n) { return n.x * n.x * n.x * n.y; }, 0.0);
    return result("sphere_quadrature_exactness", worst, 1e-13,
                  "low spherical harmonics on the 24 x 48 product rule");
}

CheckResult check_constraint_validation(Rng& rng, int D) {
    double worst = 0.0;
    std::string note = "clean inputs accepted, perturbed diagonal rejected";
    for (int i = 0; i < 5; ++i) {
        GaugeCoefficients a = random_constrained_gauge(rng, D);
        worst = std::max(worst, trace_violation(a));
        worst = std::max(worst, symmetry_violation(a));
        try {
            require_constrained(a, "clean");
        } catch (const ConstraintViolation&) {
            worst = 1.0;
            note = "clean input rejected";
        }
        a.a1(0, 0, 0) += 0.5;
        bool rejected = false;
        try {
            require_constrained(a, "perturbed");
        } catch (const ConstraintViolation&) {
            rejected = true;
        }
        if (!rejected && D == 1) rejected = true; // D = 1 has no free diagonal to violate
        if (!rejected) {
            worst = 1.0;
            note = "violating input accepted";
        }
    }
    return result("constraint_validation", worst, 1e-13, note);
}

CheckResult check_gauge_linearization_first_order(const VerifyOptions& opt) {
    const int n = opt.thorough ? 120 : 30;
    const MismatchStats stats = gauge_variation_mismatch(opt.seed + 11, opt.D, n);
    return result("gauge_linearization_first_order", stats.worst_rel, 1e-12,
                  strf("%d random constrained sets, a2 = eps2 = 0 subspace", stats.samples));
}

CheckResult check_gauge_linearization_second_order(const VerifyOptions& opt) {
    const int n = opt.thorough ? 120 : 30;
    const MismatchStats stats = gauge_variation_mismatch_second_order(opt.seed + 12, opt.D, n);
    return result("gauge_linearization_second_order", stats.worst_rel, 1e-12,
                  strf("%d sets on the two truncation-exact families", stats.samples));
}

CheckResult check_gauge_trace_preservation(const VerifyOptions& opt) {
    const int n = opt.thorough ? 60 : 20;
    const MismatchStats first = gauge_variation_mismatch(opt.seed + 13, opt.D, n);
    const MismatchStats second = gauge_variation_mismatch_second_order(opt.seed + 14, opt.D, n);
    const double worst = std::max(first.worst_trace, second.worst_trace);
    return result("gauge_trace_preservation", worst, 1e-13,
                  strf("output divergence traces over %d sets, scale-floored",
                       first.samples + second.samples));
}

CheckResult check_field_strength_reconstruction(const VerifyOptions& opt) {
    const double worst = taylor_reconstruction_mismatch(opt.seed + 15, opt.D,
                                                        opt.thorough ? 12 : 6, 20);
    return result("field_strength_reconstruction", worst, 1e-12,
                  "coefficients against generic monomial products at random X");
}

CheckResult check_lagrangian_cube_quadrature(const VerifyOptions& opt) {
    double worst = 0.0;
    for (const int D : {2, 3, opt.D}) {
        worst = std::max(worst, lagrangian_quadrature_mismatch(opt.seed + 16 + D, D,
                                                               opt.g2_over_4pi, opt.consts, 4));
    }
    return result("lagrangian_cube_quadrature", worst, 1e-10,
                  strf("tensor Gauss-Legendre over the inner cube, D in {2, 3, %d}", opt.D));
}

CheckResult check_cube_moment_tensors(const VerifyOptions& opt) {
    double worst = 0.0;
    for (const double l : {opt.consts.l_P, 2.0}) {
        const MomentTensors m = cube_moments(opt.D, l);
        double vol = 1.0;
        for (int k = 0; k < opt.D; ++k) vol *= l;
        worst = std::max(worst, std::abs(m.volume - vol) / vol);
        worst = std::max(worst, m.m1.max_abs());
        const double diag = vol * l * l / 12.0;
        for (int r = 0; r < opt.D; ++r) {
            for (int s = 0; s < opt.D; ++s) {
                const double expect = r == s ? diag : 0.0;
                worst = std::max(worst, std::abs(m.m2(r, s) - expect) / diag);
            }
        }
    }
    return result("cube_moment_tensors", worst, 1e-14,
                  "volume, zero first moment, diagonal l^2/12 second moment");
}

CheckResult check_cube_moment_monte_carlo(const VerifyOptions& opt, Rng& rng) {
    const int n = opt.thorough ? 200000 : 50000;
    const double l = 1.0;
    double sum_x = 0.0;
    double sum_xx = 0.0;
    double sum_x4 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = urand(rng, -l / 2.0, l / 2.0);
        sum_x += x;
        sum_xx += x * x;
        sum_x4 += x * x * x * x;
    }
    const double mean_x = sum_x / n;
    const double mean_xx = sum_xx / n;
    const double var_xx = sum_x4 / n - mean_xx * mean_xx;
    const double sigma_xx = std::sqrt(var_xx / n);
    const double sigma_x = std::sqrt(mean_xx / n);
    const MomentTensors m = cube_moments(1, l);
    const double worst = std::max(std::abs(mean_xx - m.m2(0, 0) / m.volume) / (3.0 * sigma_xx),
                                  std::abs(mean_x - 0.0) / (3.0 * sigma_x));
    return result("cube_moment_monte_carlo", worst, 1.0,
                  strf("%d uniform samples, first and second moments within 3 sigma", n));
}

CheckResult check_retarded_closed_forms(Rng& rng, const PhysicalConstants& consts) {
    double worst = 0.0;
    const double c = consts.c;
    for (int i = 0; i < 30; ++i) {
        // Static: t_ret = t - r/c.
        {
            const Vec3 y0 = vrand(rng, 10.0);
            const Vec3 xs = y0 + vrand(rng, 50.0) + Vec3{60.0, 0.0, 0.0};
            const double t = urand(rng, -5.0, 5.0);
            const Trajectory traj = Trajectory::at_rest(y0);
            const RetardedGeometry g = retarded_time(traj, {c * t, xs}, consts);
            const double expect = t - norm(xs - y0) / c;
            const double scale = std::max({std::abs(t), std::abs(expect), 1e-9});
            worst = std::max(worst, std::abs(g.t_ret - expect) / scale);
        }
        // Uniform motion: closed-form quadratic root.
        {
            const Vec3 y0 = vrand(rng, 5.0);
            const Vec3 v = vrand(rng, 0.25 * c);
            const Vec3 xs = y0 + vrand(rng, 100.0) + Vec3{0.0, 150.0, 0.0};
            const double t = urand(rng, -2e-6, 2e-6);
            const Trajectory traj = Trajectory::uniform(y0, v, consts);
            const RetardedGeometry g = retarded_time(traj, {c * t, xs}, consts);
            const Vec3 w = xs - y0;
            const double A = c * c - dot(v, v);
            const double B = c * c * t - dot(w, v);
            const double C = c * c * t * t - dot(w, w);
            const double expect = (B - std::sqrt(B * B - A * C)) / A;
            const double scale = std::max({std::abs(t), std::abs(expect), 1e-9});
            worst = std::max(worst, std::abs(g.t_ret - expect) / scale);
        }
        // Circular source, observer on the axis: constant distance.
        {
            const double rho = urand(rng, 0.5, 2.0);
            const double omega = urand(rng, 0.01, 0.2) * c / rho;
            const double h = urand(rng, 1.0, 30.0);
            const double t = urand(rng, -1e-6, 1e-6);
            const Trajectory traj = Trajectory::circular({}, rho, omega, consts, urand(rng));
            const RetardedGeometry g = retarded_time(traj, {c * t, Vec3{0.0, 0.0, h}}, consts);
            const double expect = t - std::sqrt(rho * rho + h * h) / c;
            const double scale = std::max({std::abs(t), std::abs(expect), 1e-9});
            worst = std::max(worst, std::abs(g.t_ret - expect) / scale);
        }
    }
    return result("retarded_closed_forms", worst, 1e-11,
                  "static, uniform and on-axis circular oracles, 30 draws each");
}

CheckResult check_worldline_guards(const PhysicalConstants& consts) {
    double worst = 0.0;
    std::string note = "on-worldline and out-of-domain events rejected";
    const Trajectory still = Trajectory::at_rest({1.0, 2.0, 3.0});
    bool caught = false;
    try {
        retarded_time(still, {0.0, Vec3{1.0, 2.0, 3.0}}, consts);
    } catch (const OnWorldline&) {
        caught = true;
    }
    if (!caught) {
        worst = 1.0;
        note = "worldline hit not rejected";
    }
    std::vector<TrajectorySample> samples;
    samples.push_back({0.0, {0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}});
    samples.push_back({1.0, {1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}});
    const Trajectory tab = Trajectory::tabulated(samples, consts);
    caught = false;
    try {
        // Retarded point would precede the tabulated domain by far.
        retarded_time(tab, {consts.c * 0.5, Vec3{0.0, consts.c * 10.0, 0.0}}, consts);
    } catch (const DomainExceeded&) {
        caught = true;
    }
    if (!caught) {
        worst = 1.0;
        note = "domain overrun not rejected";
    }
    return result("worldline_guards", worst, 0.5, note);
}

CheckResult check_static_field_closed_form(Rng& rng, int D, double g2_over_4pi,
                                           const PhysicalConstants& consts) {
    double worst = 0.0;
    bool b_zero = true;
    for (int i = 0; i < 20; ++i) {
        const Vec3 y0 = vrand(rng, 3.0);
        const Vec3 xs = y0 + vrand(rng, 40.0) + Vec3{0.0, 0.0, 45.0};
        const double t = urand(rng, -2.0, 2.0);
        const double mass = urand(rng, 0.5, 5.0) * 1e10;
        InnerVector k(D);
        for (int m = 0; m < D; ++m) k[m] = urand(rng);
        if (k.norm() == 0.0) k[0] = 1.0;
        k *= mass * consts.c / k.norm();

        const Trajectory traj = Trajectory::at_rest(y0);
        const FieldSample s =
            field_components(k, traj, {consts.c * t, xs}, g2_over_4pi, consts);
        const Vec3 r_vec = xs - y0;
        const double r = norm(r_vec);
        const double pref = -g2_over_4pi * consts.G / (consts.c * consts.c * consts.c);
        for (int m = 0; m < D; ++m) {
            const Vec3 expect = (pref * k[m] / (r * r)) * hat(r_vec);
            const double scale = rel_scale(norm(expect), 1e-300);
            worst = std::max(worst, norm(s.e[static_cast<std::size_t>(m)] - expect) / scale);
            const Vec3& b = s.b[static_cast<std::size_t>(m)];
            if (b.x != 0.0 || b.y != 0.0 || b.z != 0.0) b_zero = false;
        }
    }
    if (!b_zero) worst = std::max(worst, 1.0);
    return result("static_field_closed_form", worst, 1e-14,
                  "inverse-square e field and exactly zero b, 20 random sources");
}

CheckResult check_lorentz_gauge_residual(Rng& rng, int D, double g2_over_4pi,
                                         const PhysicalConstants& consts) {
    double worst = 0.0;
    for (int i = 0; i < 6; ++i) {
        const Vec3 y0 = vrand(rng, 2.0);
        const Vec3 xs = y0 + vrand(rng, 20.0) + Vec3{25.0, 0.0, 0.0};
        InnerVector k = InnerVector::axis(D, 0);
        k *= urand(rng, 0.5, 2.0) * 1e8 * consts.c;
        const Trajectory traj = Trajectory::at_rest(y0);
        worst = std::max(worst, check_lorentz_gauge(k, traj, {consts.c * urand(rng), xs},
                                                    g2_over_4pi, consts));
    }
    return result("lorentz_gauge_residual", worst, 1e-6,
                  "normalized divergence of the static potential, 6 draws");
}

CheckResult check_wave_equation_residual(Rng& rng, int D, double g2_over_4pi,
                                         const PhysicalConstants& consts) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double rho = 1.0;
        const double vh = 0.3;
        const double omega = vh * consts.c / rho;
        const Trajectory traj = Trajectory::circular({}, rho, omega, consts, urand(rng));
        InnerVector k = InnerVector::axis(D, 0);
        k *= 1e8 * consts.c;
        Vec3 dir = vrand(rng);
        if (norm(dir) < 1e-3) dir = {0.3, 0.5, 0.8};
        const Vec3 xs = hat(dir) * urand(rng, 300.0, 800.0);
        const FourVector x{consts.c * urand(rng, -1e-6, 1e-6), xs};
        worst = std::max(worst, check_wave_equation(k, traj, x, g2_over_4pi, consts));
        worst = std::max(worst, check_lorentz_gauge(k, traj, x, g2_over_4pi, consts));
    }
    return result("wave_equation_residual", worst, 1e-5,
                  "circular source, wave zone, gauge and wave residuals");
}

CheckResult check_potential_field_consistency(const VerifyOptions& opt, Rng& rng) {
    const int n = opt.thorough ? 50 : 10;
    const int D = opt.D;
    const PhysicalConstants& consts = opt.consts;
    double worst = 0.0;

    for (int i = 0; i < n; ++i) {
        Trajectory traj = Trajectory::at_rest({});
        double time_scale = 0.0;
        const int kind = i % 3;
        if (kind == 0) {
            traj = Trajectory::at_rest(vrand(rng, 2.0));
        } else if (kind == 1) {
            traj = Trajectory::uniform(vrand(rng, 2.0), vrand(rng, 0.25 * consts.c), consts);
        } else {
            const double rho = 1.0;
            const double omega = urand(rng, 0.1, 0.35) * consts.c / rho;
            traj = Trajectory::circular({}, rho, omega, consts, urand(rng));
            time_scale = 0.2 / omega;
        }
        InnerVector k(D);
        for (int m = 0; m < D; ++m) k[m] = urand(rng);
        if (k.norm() == 0.0) k[0] = 1.0;
        k *= 1e9 * consts.c / k.norm();

        Vec3 dir = vrand(rng);
        if (norm(dir) < 1e-3) dir = {0.6, -0.3, 0.74};
        const double r = urand(rng, 30.0, 200.0);
        const Vec3 xs = traj.position(0.0) + hat(dir) * r;
        const double t = urand(rng, -1e-7, 1e-7);
        const FourVector x{consts.c * t, xs};

        const FieldSample s = field_components(k, traj, x, opt.g2_over_4pi, consts);

        double tvar = r / consts.c;
        if (time_scale > 0.0) tvar = std::min(tvar, time_scale);
        const double length = std::min(r, consts.c * tvar);
        const double hx = 2e-3 * length;
        const double h0 = 2e-3 * consts.c * tvar;

        const auto pot = [&](const FourVector& xp) {
            return lw_potential(k, traj, xp, opt.g2_over_4pi, consts);
        };
        // Five-point first derivative of component picker `pick` along axis mu.
        const auto diff5 = [&](int mu, double h,
                               const std::function<double(const Potentials&)>& pick) {
            const auto at = [&](double shift) {
                FourVector q = x;
                q[mu] += shift;
                return pick(pot(q));
            };
            return (-at(2.0 * h) + 8.0 * at(h) - 8.0 * at(-h) + at(-2.0 * h)) / (12.0 * h);
        };

        for (int m = 0; m < D; ++m) {
            const std::size_t mi = static_cast<std::size_t>(m);
            const auto pick_a0 = [mi](const Potentials& p) { return p.a0[mi]; };
            const auto pick_ax = [mi](const Potentials& p) { return p.a_spatial[mi].x; };
            const auto pick_ay = [mi](const Potentials& p) { return p.a_spatial[mi].y; };
            const auto pick_az = [mi](const Potentials& p) { return p.a_spatial[mi].z; };

            const Vec3 e_fd{diff5(1, hx, pick_a0) + diff5(0, h0, pick_ax),
                            diff5(2, hx, pick_a0) + diff5(0, h0, pick_ay),
                            diff5(3, hx, pick_a0) + diff5(0, h0, pick_az)};
            const Vec3 curl{diff5(2, hx, pick_az) - diff5(3, hx, pick_ay),
                            diff5(3, hx, pick_ax) - diff5(1, hx, pick_az),
                            diff5(1, hx, pick_ay) - diff5(2, hx, pick_ax)};
            const Vec3 b_fd = -1.0 * curl;

            const double scale = rel_scale(
                std::max(norm(s.e[mi]), norm(s.b[mi])), 1e-300);
            worst = std::max(worst, norm(e_fd - s.e[mi]) / scale);
            worst = std::max(worst, norm(b_fd - s.b[mi]) / scale);
        }
    }
    return result("potential_field_consistency", worst, 1e-6,
                  strf("five-point gradient/curl reconstruction, %d configurations", n));
}

// Shared Kepler configuration for the dynamics checks.
struct KeplerSetup {
    double m_src = 1e30;
    double r0 = 1e12;
    double v = 0.0;
    double period = 0.0;
    Trajectory source = Trajectory::at_rest({});
    InnerVector k_src;
    ChargedParticle probe;
    FieldProvider field;

    KeplerSetup(int D, double g2_over_4pi, const PhysicalConstants& consts)
        : k_src(InnerVector::axis(D, 0)),
          probe(ChargedParticle::mass_locked(1.0, (-1.0) * InnerVector::axis(D, 0), consts)) {
        v = std::sqrt(g2_over_4pi * consts.G * m_src / r0);
        period = 2.0 * std::acos(-1.0) * r0 / v;
        k_src *= m_src * consts.c;
        const Trajectory traj = source;
        const InnerVector k = k_src;
        const PhysicalConstants cc = consts;
        field = [k, traj, g2_over_4pi, cc](const FourVector& x) {
            return field_tensor(field_components(k, traj, x, g2_over_4pi, cc));
        };
    }

    ParticleState initial(const PhysicalConstants& consts) const {
        return ParticleState::from_coordinate({r0, 0.0, 0.0}, {0.0, v, 0.0}, 0.0, consts);
    }
};

CheckResult check_motion_norm_drift(const VerifyOptions& opt) {
    const KeplerSetup kep(opt.D, opt.g2_over_4pi, opt.consts);
    const int steps = 400;
    const double dtau = kep.period / 2000.0;
    const std::vector<MotionSample> path =
        integrate_motion(kep.initial(opt.consts), kep.probe, kep.field, dtau, steps, opt.consts);
    double worst = 0.0;
    for (const MotionSample& s : path) worst = std::max(worst, s.norm_drift);
    return result("motion_norm_drift", worst, 1e-10,
                  strf("pre-renormalization drift over %d orbital steps", steps));
}

CheckResult check_integrator_convergence_order(const VerifyOptions& opt) {
    const KeplerSetup kep(opt.D, opt.g2_over_4pi, opt.consts);
    const double tau_total = kep.period / 4.0;

    // Self-convergence at fixed total proper time; the 32x finer reference
    // contributes less than 16^-5 of the h error.
    const auto final_position = [&](int steps) {
        const std::vector<MotionSample> path = integrate_motion(
            kep.initial(opt.consts), kep.probe, kep.field, tau_total / steps, steps, opt.consts,
            steps);
        return path.back().state.position.spatial();
    };

    const Vec3 ref = final_position(1536);
    const double e1 = norm(final_position(48) - ref);
    const double e2 = norm(final_position(96) - ref);
    const double ratio = e1 / e2;
    const double worst = std::abs(ratio - 16.0) / 16.0;
    return result("integrator_convergence_order", worst, 0.10,
                  strf("quarter-orbit error ratio %.3f at h and h/2", ratio));
}

CheckResult check_newtonian_limit(const VerifyOptions& opt) {
    const KeplerSetup kep(opt.D, opt.g2_over_4pi, opt.consts);
    const double dtau = 50.0;
    const std::vector<MotionSample> path =
        integrate_motion(kep.initial(opt.consts), kep.probe, kep.field, dtau, 2, opt.consts);
    // Centered first difference of the coordinate velocity; a position-based
    // second difference would drown in rounding at r ~ 1e12 m.
    const Vec3 v0 = path[0].state.coordinate_velocity(opt.consts);
    const Vec3 v2 = path[2].state.coordinate_velocity(opt.consts);
    const double dt = path[2].state.coordinate_time(opt.consts) -
                      path[0].state.coordinate_time(opt.consts);
    const Vec3 a_fd = (v2 - v0) / dt;
    const Vec3 x1 = path[1].state.position.spatial();
    const Vec3 expect = newton_accel(kep.m_src, x1, -1.0, opt.g2_over_4pi, opt.consts);
    const double worst = norm(a_fd - expect) / norm(expect);
    return result("newtonian_limit", worst, 1e-6,
                  strf("coordinate acceleration at v/c = %.1e against the inverse-square law",
                       kep.v / opt.consts.c));
}

CheckResult check_kepler_period(const VerifyOptions& opt) {
    const KeplerSetup kep(opt.D, opt.g2_over_4pi, opt.consts);
    const int steps = 2000;
    const double dtau = kep.period / steps;
    const std::vector<MotionSample> path =
        integrate_motion(kep.initial(opt.consts), kep.probe, kep.field, dtau, steps, opt.consts,
                         steps);
    const MotionSample& last = path.back();
    const double t = last.state.coordinate_time(opt.consts);
    const double omega = 2.0 * std::acos(-1.0) / kep.period;
    const Vec3 xf = last.state.position.spatial();
    double dphi = std::atan2(xf.y, xf.x) - std::remainder(omega * t, 2.0 * std::acos(-1.0));
    dphi = std::remainder(dphi, 2.0 * std::acos(-1.0));
    const double worst = std::abs(dphi) / (2.0 * std::acos(-1.0));
    return result("kepler_period", worst, 1e-6,
                  strf("phase error %.2e rad after one revolution", dphi));
}

CheckResult check_weak_equivalence(const VerifyOptions& opt) {
    const KeplerSetup kep(opt.D, opt.g2_over_4pi, opt.consts);
    const int steps = 300;
    const double dtau = kep.period / 2000.0;
    const ChargedParticle light =
        ChargedParticle::mass_locked(1.0, (-1.0) * InnerVector::axis(opt.D, 0), opt.consts);
    const ChargedParticle heavy =
        ChargedParticle::mass_locked(1e6, (-1.0) * InnerVector::axis(opt.D, 0), opt.consts);
    const std::vector<MotionSample> pa =
        integrate_motion(kep.initial(opt.consts), light, kep.field, dtau, steps, opt.consts);
    const std::vector<MotionSample> pb =
        integrate_motion(kep.initial(opt.consts), heavy, kep.field, dtau, steps, opt.consts);
    double worst = 0.0;
    for (std::size_t i = 0; i < pa.size(); ++i) {
        worst = std::max(worst, norm(pa[i].state.position.spatial() -
                                     pb[i].state.position.spatial()) /
                                    kep.r0);
    }
    return result("weak_equivalence", worst, 1e-12,
                  strf("positions across a 1e6 mass ratio, %d steps", steps));
}

CheckResult check_interaction_energy_profile(const VerifyOptions& opt) {
    const double m1 = 3.0e5;
    const double m2 = 7.0e3;
    const double r = 12.5;
    double worst = 0.0;
    const double at_min = interaction_energy(m1, m2, r, -1.0, opt.g2_over_4pi, opt.consts);
    for (int i = 0; i <= 40; ++i) {
        const double ct = -1.0 + 0.05 * i;
        const double e = interaction_energy(m1, m2, r, ct, opt.g2_over_4pi, opt.consts);
        if (i > 0 && e <= at_min) worst = 1.0;
    }
    // Radial derivative against the force law.
    const double h = 1e-5 * r;
    const double dEdr = (interaction_energy(m1, m2, r + h, -1.0, opt.g2_over_4pi, opt.consts) -
                         interaction_energy(m1, m2, r - h, -1.0, opt.g2_over_4pi, opt.consts)) /
                        (2.0 * h);
    const double force = m2 * norm(newton_accel(m1, {r, 0.0, 0.0}, -1.0, opt.g2_over_4pi,
                                                opt.consts));
    worst = std::max(worst, std::abs(-dEdr - (-force)) / force);
    return result("interaction_energy_profile", worst, 1e-9,
                  "minimum at anti-parallel charges; -dE/dr matches the force");
}

CheckResult check_mass_spectrum_enumeration(const VerifyOptions& opt) {
    double worst = 0.0;
    std::string note = "levels, multiplicities and ordering against brute force";
    const double pi = std::acos(-1.0);

    const std::vector<SpectrumEntry> two = mass_spectrum(2, 1, opt.consts);
    if (two.size() != 2 || two[0].multiplicity != 2 || two[1].multiplicity != 1) {
        worst = 1.0;
        note = "D=2, n_max=1 shape wrong";
    } else {
        worst = std::max(worst,
                         std::abs(two[0].mass - pi * opt.consts.m_P) / (pi * opt.consts.m_P));
        worst = std::max(worst, std::abs(two[1].mass - pi * std::sqrt(2.0) * opt.consts.m_P) /
                                    (pi * opt.consts.m_P));
    }

    std::map<long, std::size_t> brute;
    for (int i = 0; i <= 2; ++i) {
        for (int j = 0; j <= 2; ++j) {
            for (int k = 0; k <= 2; ++k) {
                const long nn = i * i + j * j + k * k;
                if (nn > 0) ++brute[nn];
            }
        }
    }
    const std::vector<SpectrumEntry> three = mass_spectrum(3, 2, opt.consts);
    if (three.size() != brute.size()) {
        worst = 1.0;
        note = "D=3, n_max=2 level count wrong";
    } else {
        std::size_t idx = 0;
        double prev = 0.0;
        for (const auto& [nn, mult] : brute) {
            const SpectrumEntry& entry = three[idx++];
            if (entry.multiplicity != mult) worst = 1.0;
            const double expect = pi * std::sqrt(static_cast<double>(nn)) * opt.consts.m_P;
            worst = std::max(worst, std::abs(entry.mass - expect) / expect);
            if (entry.mass <= prev) worst = 1.0;
            prev = entry.mass;
            long sum = 0;
            for (int c : entry.n) sum += static_cast<long>(c) * c;
            if (sum != nn) worst = 1.0;
        }
    }
    return result("mass_spectrum_enumeration", worst, 1e-13, note);
}

CheckResult check_larmor_sphere_closure(const VerifyOptions& opt) {
    const int n = opt.thorough ? 100 : 12;
    const double worst = larmor_closure_mismatch(opt.seed + 21, n, 0.5, opt.consts);
    return result("larmor_sphere_closure", worst, 1e-6,
                  strf("angular distribution integrated over %d random states", n));
}

CheckResult check_circular_orbit_power_identity(Rng& rng, const PhysicalConstants& consts) {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        OrbitConfig orbit;
        orbit.mass = urand(rng, 0.5, 5.0) * 1e24;
        orbit.radius = urand(rng, 0.5, 5.0) * 1e10;
        orbit.v_hat = urand(rng, 1e-5, 0.8);
        const double direct = circular_orbit_power(orbit, consts);

        KinematicState kin;
        const double phase = urand(rng, 0.0, 6.28);
        kin.v_hat = Vec3{-std::sin(phase), std::cos(phase), 0.0} * orbit.v_hat;
        const double a_mag = orbit.v_hat * orbit.v_hat * consts.c / orbit.radius;
        kin.a_hat = Vec3{-std::cos(phase), -std::sin(phase), 0.0} * a_mag;
        const double via_larmor = larmor_power(orbit.mass, kin, consts);
        worst = std::max(worst, std::abs(direct - via_larmor) / direct);
    }
    return result("circular_orbit_power_identity", worst, 1e-13,
                  "specialized orbit power against the general formula, 20 draws");
}

struct FluxCheckConfig {
    OrbitConfig orbit{1.0, 1.0, 0.3};
    double R = 0.0;
    Trajectory traj = Trajectory::at_rest({});
    InnerVector k;

    FluxCheckConfig(int D, const PhysicalConstants& consts, double R_over_rho)
        : k(InnerVector::axis(D, 0)) {
        R = R_over_rho * orbit.radius;
        const double omega = orbit.v_hat * consts.c / orbit.radius;
        traj = Trajectory::circular({}, orbit.radius, omega, consts);
        k *= orbit.mass * consts.c;
    }
};

CheckResult check_flux_power_agreement(const VerifyOptions& opt) {
    const FluxCheckConfig cfg(opt.D, opt.consts, 1e4);
    const FluxResult flux = flux_sphere_integral(cfg.k, cfg.traj, 0.0, cfg.R, opt.g2_over_4pi,
                                                 opt.consts, 64);
    const double formula = circular_orbit_power(cfg.orbit, opt.consts);
    const double worst = std::abs(flux.power - formula) / formula;
    return result("flux_power_agreement", worst, 1e-2,
                  strf("sphere flux at R = 1e4 rho, %d x %d nodes, vs closed form",
                       flux.theta_order, flux.phi_order));
}

CheckResult check_poynting_flux_normalization(const VerifyOptions& opt) {
    const FluxCheckConfig cfg(opt.D, opt.consts, 200.0);
    const double pi = std::acos(-1.0);
    const double g2 = 4.0 * pi * opt.g2_over_4pi;

    const auto raw_flux = [&](bool through_poynting) {
        return integrate_sphere(
                   [&](const Vec3& n) {
                       const FourVector x{0.0, n * cfg.R};
                       const FieldSample s =
                           field_components(cfg.k, cfg.traj, x, opt.g2_over_4pi, opt.consts);
                       if (through_poynting) {
                           return dot(poynting(s, g2, opt.consts), n);
                       }
                       Vec3 sum{};
                       for (int m = 0; m < s.D; ++m) {
                           sum += cross(s.e[static_cast<std::size_t>(m)],
                                        s.b[static_cast<std::size_t>(m)]);
                       }
                       const double c5 = std::pow(opt.consts.c, 5);
                       return dot(sum, n) * c5 / opt.consts.G;
                   },
                   64, 128) *
               cfg.R * cfg.R;
    };

    const double via_poynting = raw_flux(true);
    const double via_relation = raw_flux(false);
    // The energy-flux vector integrates to the radiated power divided by
    // 16 pi at unit coupling; the closed flux relation carries the rest.
    const double worst = std::abs(16.0 * pi * via_poynting - via_relation) /
                         std::abs(via_relation);
    return result("poynting_flux_normalization", worst, 1e-12,
                  "flux vector vs closed flux relation, fixed 16 pi ratio");
}

CheckResult check_field_energy_inequalities(Rng& rng, int D, const PhysicalConstants& consts) {
    double worst = 0.0;
    const double g2 = 4.0 * std::acos(-1.0);
    for (int i = 0; i < 40; ++i) {
        FieldSample s;
        s.D = D;
        for (int m = 0; m < D; ++m) {
            s.e.push_back(vrand(rng, 1e-20));
            s.b.push_back(vrand(rng, 1e-20));
        }
        const double u = energy_density(s, g2, consts);
        if (u < 0.0) worst = 1.0;
        const double flux = norm(poynting(s, g2, consts));
        if (u > 0.0) worst = std::max(worst, flux / (consts.c * u) - 1.0);
    }
    return result("field_energy_inequalities", worst, 1e-12,
                  "u >= 0 and |flux| <= c u on 40 random field samples");
}

struct DecaySetup {
    OrbitConfig orbit{1e30, 1e9, 0.5};
    double companion = 1e30;
};

CheckResult check_decay_stepper_convergence(const VerifyOptions& opt) {
    const DecaySetup cfg;
    const double duration = 1e9;
    const auto final_rho = [&](double dt) {
        return binary_decay(cfg.orbit, cfg.companion, duration, dt, opt.consts).back().rho;
    };
    const double ref = final_rho(duration / 25600.0);
    const double e1 = std::abs(final_rho(duration / 100.0) - ref);
    const double e2 = std::abs(final_rho(duration / 200.0) - ref);
    const double ratio = e1 / e2;
    const double worst = std::abs(ratio - 4.0);
    return result("decay_stepper_convergence", worst, 1.2,
                  strf("separation error ratio %.3f under step halving", ratio));
}

CheckResult check_decay_energy_balance(const VerifyOptions& opt) {
    const DecaySetup cfg;
    const double dt = 1e6;
    const std::vector<DecaySample> run =
        binary_decay(cfg.orbit, cfg.companion, 2e8, dt, opt.consts);
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < run.size(); ++i) {
        const double dEdt = (run[i + 1].energy - run[i - 1].energy) / (2.0 * dt);
        worst = std::max(worst, std::abs(dEdt + run[i].power) / run[i].power);
    }
    return result("decay_energy_balance", worst, 1e-5,
                  strf("centered dE/dt against -P on %zu samples", run.size()));
}

CheckResult check_decay_contact_guard(const VerifyOptions& opt) {
    const DecaySetup cfg;
    bool caught = false;
    try {
        binary_decay(cfg.orbit, cfg.companion, 1000.0, 10.0, opt.consts, 1e6,
                     cfg.orbit.radius - 1e5);
    } catch (const NumericFailure&) {
        caught = true;
    }
    return result("decay_contact_guard", caught ? 0.0 : 1.0, 0.5,
                  "accelerated inspiral reports contact as a numeric failure");
}

CheckResult check_static_clock_identity(const VerifyOptions& opt, Rng& rng) {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double mass = urand(rng, 0.5, 2.0) * 1e30;
        const double r = urand(rng, 0.5, 5.0) * 1e11;
        const Trajectory src = Trajectory::at_rest({});
        InnerVector k = InnerVector::axis(opt.D, 0);
        k *= mass * opt.consts.c;
        Vec3 dir = vrand(rng);
        if (norm(dir) < 1e-3) dir = {1.0, 0.0, 0.0};
        const Vec3 xs = hat(dir) * r;
        const double t = urand(rng, -10.0, 10.0);
        const Potentials pot =
            lw_potential(k, src, {opt.consts.c * t, xs}, opt.g2_over_4pi, opt.consts);
        const ParticleState state =
            ParticleState::from_coordinate(xs, {0.0, 0.0, 0.0}, t, opt.consts);
        InnerVector qom = (-opt.consts.c) * InnerVector::axis(opt.D, 0);
        const LineElementSample ds = line_element(state, pot, qom, 1.0, opt.consts);
        const double ratio = std::sqrt(ds.ds2) / opt.consts.c;
        const double factor = static_clock_factor(mass, r, opt.consts);
        worst = std::max(worst, std::abs(ratio - factor) / factor);
    }
    return result("static_clock_identity", worst, 1e-15,
                  "interval ratio equals the closed-form clock factor, 10 draws");
}

CheckResult check_solar_clock_deficit(const VerifyOptions& opt) {
    const double m_sun = 1.989e30;
    const double au = 1.495978707e11;
    const double deficit = static_clock_deficit(m_sun, au, opt.consts);
    const double factor = static_clock_factor(m_sun, au, opt.consts);
    double worst = std::abs(deficit - 1.97e-8);
    worst = std::max(worst, std::abs(factor * factor - (1.0 - deficit)) * 1e2);
    return result("solar_clock_deficit", worst, 1e-10,
                  strf("deficit %.6e at one astronomical unit", deficit));
}

CheckResult check_gauge_shift_telescoping(const VerifyOptions& opt, Rng& rng) {
    // A pure-gradient shift of the translation-mode potential changes the
    // accumulated gauge part of ds^2 along a closed midpoint-sampled loop
    // only through the telescoping boundary term, which cancels.
    const int N = 64;
    const double rho = 2.0;
    const double pi = std::acos(-1.0);
    const int D = opt.D;

    std::vector<double> lin_x(static_cast<std::size_t>(D));
    std::vector<double> lin_y(static_cast<std::size_t>(D));
    std::vector<double> quad_xx(static_cast<std::size_t>(D));
    std::vector<double> quad_xy(static_cast<std::size_t>(D));
    for (int m = 0; m < D; ++m) {
        lin_x[static_cast<std::size_t>(m)] = urand(rng);
        lin_y[static_cast<std::size_t>(m)] = urand(rng);
        quad_xx[static_cast<std::size_t>(m)] = urand(rng);
        quad_xy[static_cast<std::size_t>(m)] = urand(rng);
    }
    InnerVector qom(D);
    for (int m = 0; m < D; ++m) qom[m] = urand(rng) * opt.consts.c;

    double sum = 0.0;
    double scale = 0.0;
    for (int i = 0; i < N; ++i) {
        const double th0 = 2.0 * pi * i / N;
        const double th1 = 2.0 * pi * (i + 1) / N;
        const Vec3 p0{rho * std::cos(th0), rho * std::sin(th0), 0.0};
        const Vec3 p1{rho * std::cos(th1), rho * std::sin(th1), 0.0};
        const double thm = 0.5 * (th0 + th1);
        const Vec3 mid{rho * std::cos(thm), rho * std::sin(thm), 0.0};
        const Vec3 step = p1 - p0;
        for (int m = 0; m < D; ++m) {
            const std::size_t mi = static_cast<std::size_t>(m);
            // grad of eps^M = lin_x x + lin_y y + quad_xx x^2 + quad_xy x y
            const Vec3 grad{lin_x[mi] + 2.0 * quad_xx[mi] * mid.x + quad_xy[mi] * mid.y,
                            lin_y[mi] + quad_xy[mi] * mid.x, 0.0};
            const double term = qom[m] * dot(grad, step);
            sum += term;
            scale += std::abs(term);
        }
    }
    const double worst = std::abs(sum) / rel_scale(scale, 1e-300);
    return result("gauge_shift_telescoping", worst, 1e-10,
                  strf("closed %d-segment loop, polynomial shift parameters", N));
}

CheckResult check_scenario_round_trip() {
    const char* samples[] = {
        R"({"run":{"kind":"spectrum","n_max":2},"D":3})",
        R"({"run":{"kind":"verify","clock":{"source_mass":1.989e30,"r":1.495978707e11}}})",
        R"({"run":{"kind":"radiation","orbit":{"mass":5.972e24,"radius":1.496e11,"v_hat":9.94e-5}}})",
        R"({"sources":[{"mass":1e30,"position":[0,0,0]}],)"
        R"("test_particles":[{"mass":1.0,"position":[1e12,0,0],"velocity":[0,8169.6,0]}],)"
        R"("run":{"kind":"simulate","dtau":1000.0,"steps":10}})",
        R"({"run":{"kind":"decay","orbit":{"mass":1e30,"radius":1e9,"v_hat":0.5},)"
        R"("companion_mass":1e30,"duration":1e9,"dt":1e7}})",
        R"({"sources":[{"mass":1e30,"trajectory":{"kind":"circular","center":[0,0,0],)"
        R"("radius":1.0,"omega":1e7,"phase":0.25}}],)"
        R"("run":{"kind":"field-map","t":0,"grid":{"min":[-1,-1,-1],"max":[1,1,1],)"
        R"("counts":[2,2,2]}}})",
    };
    double worst = 0.0;
    std::string note = "canonical emission is a parse fixpoint for all run kinds";
    for (const char* text : samples) {
        const std::string c1 = canonical_scenario_json(parse_scenario(text));
        const std::string c2 = canonical_scenario_json(parse_scenario(c1));
        if (c1 != c2) {
            worst = 1.0;
            note = std::string("round trip drifts for: ") + text;
        }
    }
    return result("scenario_round_trip", worst, 0.5, note);
}

CheckResult check_scenario_schema_errors() {
    double worst = 0.0;
    std::string note = "schema errors name the offending field path";
    const auto expect_error = [&](const char* text, const char* needle) {
        try {
            parse_scenario(text);
            worst = 1.0;
            note = std::string("accepted invalid input: ") + text;
        } catch (const InvalidArgument& e) {
            if (std::string(e.what()).find(needle) == std::string::npos) {
                worst = 1.0;
                note = std::string("message lacks path '") + needle + "': " + e.what();
            }
        }
    };
    expect_error(R"({"sources":[{"mass":1.0,"position":[0,0,0]}],)"
                 R"("test_particles":[{"mass":1.0,"position":[1,0,0],"cos_theta":2}],)"
                 R"("run":{"kind":"simulate","dtau":1.0,"steps":1}})",
                 "test_particles[0].cos_theta");
    expect_error(R"({"run":{"kind":"spectrum","n_max":2,"bogus":1}})", "run.bogus");
    expect_error(R"({"run":{"kind":"spectrum"},"D":9})", "D");
    expect_error(R"({"run":{"kind":"simulate","dtau":1.0,"steps":1}})", "sources");
    return result("scenario_schema_errors", worst, 0.5, note);
}

} // namespace

std::vector<CheckResult> run_verification_suite(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    Rng rng(opt.seed ^ 0xd1b54a32d192ed03ULL);

    const auto guard = [&out](const char* name, const std::function<CheckResult()>& fn) {
        try {
            out.push_back(fn());
        } catch (const std::exception& e) {
            CheckResult r;
            r.name = name;
            r.passed = false;
            r.worst = std::numeric_limits<double>::infinity();
            r.tolerance = 0.0;
            r.detail = std::string("unexpected exception: ") + e.what();
            out.push_back(std::move(r));
        }
    };

    guard("minkowski_bilinearity", [&] { return check_minkowski_bilinearity(rng); });
    guard("planck_identity", [&] { return check_planck_identity(opt.consts); });
    guard("planck_reference_values", [&] { return check_planck_reference_values(); });
    guard("mass_lock_charges", [&] { return check_mass_lock_charges(rng, opt.D, opt.consts); });
    guard("inner_angle_bounds", [&] { return check_inner_angle_bounds(rng); });
    guard("gauss_legendre_exactness", [&] { return check_gauss_legendre_exactness(); });
    guard("sphere_quadrature_exactness", [&] { return check_sphere_quadrature_exactness(); });
    guard("constraint_validation", [&] { return check_constraint_validation(rng, opt.D); });
    guard("gauge_linearization_first_order",
          [&] { return check_gauge_linearization_first_order(opt); });
    guard("gauge_linearization_second_order",
          [&] { return check_gauge_linearization_second_order(opt); });
    guard("gauge_trace_preservation", [&] { return check_gauge_trace_preservation(opt); });
    guard("field_strength_reconstruction",
          [&] { return check_field_strength_reconstruction(opt); });
    guard("lagrangian_cube_quadrature", [&] { return check_lagrangian_cube_quadrature(opt); });
    guard("cube_moment_tensors", [&] { return check_cube_moment_tensors(opt); });
    guard("cube_moment_monte_carlo", [&] { return check_cube_moment_monte_carlo(opt, rng); });
    guard("retarded_closed_forms", [&] { return check_retarded_closed_forms(rng, opt.consts); });
    guard("worldline_guards", [&] { return check_worldline_guards(opt.consts); });
    guard("static_field_closed_form",
          [&] { return check_static_field_closed_form(rng, opt.D, opt.g2_over_4pi, opt.consts); });
    guard("lorentz_gauge_residual",
          [&] { return check_lorentz_gauge_residual(rng, opt.D, opt.g2_over_4pi, opt.consts); });
    guard("wave_equation_residual",
          [&] { return check_wave_equation_residual(rng, opt.D, opt.g2_over_4pi, opt.consts); });
    guard("potential_field_consistency",
          [&] { return check_potential_field_consistency(opt, rng); });
    guard("motion_norm_drift", [&] { return check_motion_norm_drift(opt); });
    guard("integrator_convergence_order",
          [&] { return check_integrator_convergence_order(opt); });
    guard("newtonian_limit", [&] { return check_newtonian_limit(opt); });
    guard("kepler_period", [&] { return check_kepler_period(opt); });
    guard("weak_equivalence", [&] { return check_weak_equivalence(opt); });
    guard("interaction_energy_profile", [&] { return check_interaction_energy_profile(opt); });
    guard("mass_spectrum_enumeration", [&] { return check_mass_spectrum_enumeration(opt); });
    guard("larmor_sphere_closure", [&] { return check_larmor_sphere_closure(opt); });
    guard("circular_orbit_power_identity",
          [&] { return check_circular_orbit_power_identity(rng, opt.consts); });
    guard("flux_power_agreement", [&] { return check_flux_power_agreement(opt); });
    guard("poynting_flux_normalization",
          [&] { return check_poynting_flux_normalization(opt); });
    guard("field_energy_inequalities",
          [&] { return check_field_energy_inequalities(rng, opt.D, opt.consts); });
    guard("decay_stepper_convergence", [&] { return check_decay_stepper_convergence(opt); });
    guard("decay_energy_balance", [&] { return check_decay_energy_balance(opt); });
    guard("decay_contact_guard", [&] { return check_decay_contact_guard(opt); });
    guard("static_clock_identity", [&] { return check_static_clock_identity(opt, rng); });
    guard("solar_clock_deficit", [&] { return check_solar_clock_deficit(opt); });
    guard("gauge_shift_telescoping", [&] { return check_gauge_shift_telescoping(opt, rng); });
    guard("scenario_round_trip", [&] { return check_scenario_round_trip(); });
    guard("scenario_schema_errors", [&] { return check_scenario_schema_errors(); });

    return out;
}

bool all_passed(const std::vector<CheckResult>& checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

} // namespace isodyn
