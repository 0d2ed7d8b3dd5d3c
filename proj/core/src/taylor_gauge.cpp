#include "isodyn/taylor_gauge.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "isodyn/errors.hpp"

namespace isodyn {

namespace {

constexpr int kPairMu[kPairCount] = {0, 0, 0, 1, 1, 2};
constexpr int kPairNu[kPairCount] = {1, 2, 3, 2, 3, 3};

void check_dim(int D, const char* what) {
    if (D < 1 || D > 8) {
        throw InvalidArgument(std::string(what) + ": inner dimension must be in [1, 8]");
    }
}

// Max |sum_M t[...][M][M]| over leading indices; t has trailing extents (D, D).
double rank_trace(const Tensor& t, int lead, int D) {
    double worst = 0.0;
    for (int a = 0; a < lead; ++a) {
        double s = 0.0;
        for (int m = 0; m < D; ++m) s += t.data()[static_cast<std::size_t>((a * D + m) * D + m)];
        worst = std::max(worst, std::abs(s));
    }
    return worst;
}

// Max |sum_M t[...][M][M][S]| over leading indices and S; trailing (D, D, D).
double rank_trace3(const Tensor& t, int lead, int D) {
    double worst = 0.0;
    for (int a = 0; a < lead; ++a) {
        for (int s_idx = 0; s_idx < D; ++s_idx) {
            double s = 0.0;
            for (int m = 0; m < D; ++m) {
                s += t.data()[static_cast<std::size_t>(((a * D + m) * D + m) * D + s_idx)];
            }
            worst = std::max(worst, std::abs(s));
        }
    }
    return worst;
}

// Max |t[...][R][S] - t[...][S][R]| for trailing (D, D) index pair.
double rank_symmetry(const Tensor& t, int lead, int D) {
    double worst = 0.0;
    for (int a = 0; a < lead; ++a) {
        for (int r = 0; r < D; ++r) {
            for (int s = r + 1; s < D; ++s) {
                const double u = t.data()[static_cast<std::size_t>((a * D + r) * D + s)];
                const double v = t.data()[static_cast<std::size_t>((a * D + s) * D + r)];
                worst = std::max(worst, std::abs(u - v));
            }
        }
    }
    return worst;
}

double scale3(const Tensor& t0, const Tensor& t1, const Tensor& t2) {
    return std::max({t0.max_abs(), t1.max_abs(), t2.max_abs()});
}

void require_ok(double trace, double sym, double scale, const char* what) {
    const double tol = kTraceTol * scale;
    if (trace > tol) {
        throw ConstraintViolation(std::string(what) +
                                  ": divergence trace constraint violated (|trace| = " +
                                  std::to_string(trace) + ", scale = " + std::to_string(scale) +
                                  ")");
    }
    if (sym > tol) {
        throw ConstraintViolation(std::string(what) +
                                  ": second-order coefficients not symmetric in (R, S)");
    }
}

} // namespace

int pair_index(int mu, int nu) {
    for (int p = 0; p < kPairCount; ++p) {
        if (kPairMu[p] == mu && kPairNu[p] == nu) return p;
    }
    throw InvalidArgument("pair_index requires 0 <= mu < nu <= 3");
}

void pair_members(int p, int& mu, int& nu) {
    if (p < 0 || p >= kPairCount) throw InvalidArgument("pair index out of range");
    mu = kPairMu[p];
    nu = kPairNu[p];
}

double pair_metric_sign(int p) {
    if (p < 0 || p >= kPairCount) throw InvalidArgument("pair index out of range");
    return kPairMu[p] == 0 ? -1.0 : 1.0;
}

GaugeParameterCoefficients GaugeParameterCoefficients::zeros(int D) {
    check_dim(D, "GaugeParameterCoefficients");
    return {D, Tensor({D}), Tensor({D, D}), Tensor({D, D, D})};
}

GaugeParameterDerivatives GaugeParameterDerivatives::zeros(int D) {
    check_dim(D, "GaugeParameterDerivatives");
    return {D, Tensor({4, D}), Tensor({4, D, D}), Tensor({4, D, D, D})};
}

GaugeCoefficients GaugeCoefficients::zeros(int D) {
    check_dim(D, "GaugeCoefficients");
    return {D, Tensor({4, D}), Tensor({4, D, D}), Tensor({4, D, D, D})};
}

GaugeDerivatives GaugeDerivatives::zeros(int D) {
    check_dim(D, "GaugeDerivatives");
    return {D, Tensor({4, 4, D}), Tensor({4, 4, D, D}), Tensor({4, 4, D, D, D})};
}

FieldStrengthCoefficients FieldStrengthCoefficients::zeros(int D) {
    check_dim(D, "FieldStrengthCoefficients");
    return {D, Tensor({kPairCount, D}), Tensor({kPairCount, D, D}),
            Tensor({kPairCount, D, D, D})};
}

GaugeCoefficients operator+(GaugeCoefficients a, const GaugeCoefficients& b) {
    a.a0 += b.a0;
    a.a1 += b.a1;
    a.a2 += b.a2;
    return a;
}
GaugeCoefficients operator-(GaugeCoefficients a, const GaugeCoefficients& b) {
    a.a0 -= b.a0;
    a.a1 -= b.a1;
    a.a2 -= b.a2;
    return a;
}
GaugeCoefficients operator*(double s, GaugeCoefficients a) {
    a.a0 *= s;
    a.a1 *= s;
    a.a2 *= s;
    return a;
}

GaugeDerivatives operator+(GaugeDerivatives a, const GaugeDerivatives& b) {
    a.d0 += b.d0;
    a.d1 += b.d1;
    a.d2 += b.d2;
    return a;
}
GaugeDerivatives operator-(GaugeDerivatives a, const GaugeDerivatives& b) {
    a.d0 -= b.d0;
    a.d1 -= b.d1;
    a.d2 -= b.d2;
    return a;
}
GaugeDerivatives operator*(double s, GaugeDerivatives a) {
    a.d0 *= s;
    a.d1 *= s;
    a.d2 *= s;
    return a;
}

FieldStrengthCoefficients operator+(FieldStrengthCoefficients a,
                                    const FieldStrengthCoefficients& b) {
    a.f0 += b.f0;
    a.f1 += b.f1;
    a.f2 += b.f2;
    return a;
}
FieldStrengthCoefficients operator-(FieldStrengthCoefficients a,
                                    const FieldStrengthCoefficients& b) {
    a.f0 -= b.f0;
    a.f1 -= b.f1;
    a.f2 -= b.f2;
    return a;
}
FieldStrengthCoefficients operator*(double s, FieldStrengthCoefficients a) {
    a.f0 *= s;
    a.f1 *= s;
    a.f2 *= s;
    return a;
}

double trace_violation(const GaugeParameterCoefficients& e) {
    return std::max(rank_trace(e.eps1, 1, e.D), rank_trace3(e.eps2, 1, e.D));
}
double trace_violation(const GaugeParameterDerivatives& de) {
    return std::max(rank_trace(de.d1, 4, de.D), rank_trace3(de.d2, 4, de.D));
}
double trace_violation(const GaugeCoefficients& a) {
    return std::max(rank_trace(a.a1, 4, a.D), rank_trace3(a.a2, 4, a.D));
}
double trace_violation(const GaugeDerivatives& da) {
    return std::max(rank_trace(da.d1, 16, da.D), rank_trace3(da.d2, 16, da.D));
}
double trace_violation(const FieldStrengthCoefficients& f) {
    return std::max(rank_trace(f.f1, kPairCount, f.D), rank_trace3(f.f2, kPairCount, f.D));
}

double symmetry_violation(const GaugeParameterCoefficients& e) {
    return rank_symmetry(e.eps2, e.D, e.D);
}
double symmetry_violation(const GaugeParameterDerivatives& de) {
    return rank_symmetry(de.d2, 4 * de.D, de.D);
}
double symmetry_violation(const GaugeCoefficients& a) {
    return rank_symmetry(a.a2, 4 * a.D, a.D);
}
double symmetry_violation(const GaugeDerivatives& da) {
    return rank_symmetry(da.d2, 16 * da.D, da.D);
}
double symmetry_violation(const FieldStrengthCoefficients& f) {
    return rank_symmetry(f.f2, kPairCount * f.D, f.D);
}

void require_constrained(const GaugeParameterCoefficients& e, const char* what) {
    require_ok(trace_violation(e), symmetry_violation(e), scale3(e.eps0, e.eps1, e.eps2), what);
}
void require_constrained(const GaugeParameterDerivatives& de, const char* what) {
    require_ok(trace_violation(de), symmetry_violation(de), scale3(de.d0, de.d1, de.d2), what);
}
void require_constrained(const GaugeCoefficients& a, const char* what) {
    require_ok(trace_violation(a), symmetry_violation(a), scale3(a.a0, a.a1, a.a2), what);
}
void require_constrained(const GaugeDerivatives& da, const char* what) {
    require_ok(trace_violation(da), symmetry_violation(da), scale3(da.d0, da.d1, da.d2), what);
}
void require_constrained(const FieldStrengthCoefficients& f, const char* what) {
    require_ok(trace_violation(f), symmetry_violation(f), scale3(f.f0, f.f1, f.f2), what);
}

SymAntisymParts decompose_sym_antisym(const Tensor& t) {
    if (t.rank() != 2 || t.extent(0) != t.extent(1)) {
        throw InvalidArgument("decompose_sym_antisym expects a square rank-2 tensor");
    }
    const int D = t.extent(0);
    SymAntisymParts out{D, Tensor({D, D}), Tensor({D, D}), 0.0};
    for (int i = 0; i < D; ++i) out.trace += t(i, i);
    for (int i = 0; i < D; ++i) {
        for (int j = 0; j < D; ++j) {
            out.antisymmetric(i, j) = 0.5 * (t(i, j) - t(j, i));
            out.symmetric_traceless(i, j) = 0.5 * (t(i, j) + t(j, i));
        }
        out.symmetric_traceless(i, i) -= out.trace / D;
    }
    return out;
}

FieldStrengthCoefficients field_strength_from_gauge(const GaugeCoefficients& a,
                                                    const GaugeDerivatives& da) {
    if (a.D != da.D) throw InvalidArgument("field_strength_from_gauge: dimension mismatch");
    require_constrained(a, "gauge coefficients");
    require_constrained(da, "gauge derivatives");
    const int D = a.D;
    FieldStrengthCoefficients f = FieldStrengthCoefficients::zeros(D);

    for (int p = 0; p < kPairCount; ++p) {
        const int mu = kPairMu[p];
        const int nu = kPairNu[p];
        for (int M = 0; M < D; ++M) {
            double v0 = da.d0(mu, nu, M) - da.d0(nu, mu, M);
            for (int N = 0; N < D; ++N) {
                v0 += a.a0(mu, N) * a.a1(nu, M, N) - a.a0(nu, N) * a.a1(mu, M, N);
            }
            f.f0(p, M) = v0;

            for (int R = 0; R < D; ++R) {
                double v1 = da.d1(mu, nu, M, R) - da.d1(nu, mu, M, R);
                for (int N = 0; N < D; ++N) {
                    v1 += a.a1(mu, N, R) * a.a1(nu, M, N) - a.a1(nu, N, R) * a.a1(mu, M, N) +
                          2.0 * a.a0(mu, N) * a.a2(nu, M, N, R) -
                          2.0 * a.a0(nu, N) * a.a2(mu, M, N, R);
                }
                f.f1(p, M, R) = v1;

                for (int S = R; S < D; ++S) {
                    double v2 = da.d2(mu, nu, M, R, S) - da.d2(nu, mu, M, R, S);
                    for (int N = 0; N < D; ++N) {
                        v2 += a.a2(mu, N, R, S) * a.a1(nu, M, N) -
                              a.a2(nu, N, R, S) * a.a1(mu, M, N) +
                              a.a1(mu, N, R) * a.a2(nu, M, N, S) +
                              a.a1(mu, N, S) * a.a2(nu, M, N, R) -
                              a.a1(nu, N, R) * a.a2(mu, M, N, S) -
                              a.a1(nu, N, S) * a.a2(mu, M, N, R);
                    }
                    f.f2(p, M, R, S) = v2;
                    f.f2(p, M, S, R) = v2;
                }
            }
        }
    }
    return f;
}

GaugeCoefficients gauge_vary_gauge(const GaugeCoefficients& a,
                                   const GaugeParameterCoefficients& eps,
                                   const GaugeParameterDerivatives& deps) {
    if (a.D != eps.D || a.D != deps.D) {
        throw InvalidArgument("gauge_vary_gauge: dimension mismatch");
    }
    require_constrained(a, "gauge coefficients");
    require_constrained(eps, "gauge parameter");
    require_constrained(deps, "gauge parameter derivatives");
    const int D = a.D;
    GaugeCoefficients out = GaugeCoefficients::zeros(D);

    for (int mu = 0; mu < 4; ++mu) {
        for (int M = 0; M < D; ++M) {
            double v0 = deps.d0(mu, M);
            for (int N = 0; N < D; ++N) {
                v0 += a.a0(mu, N) * eps.eps1(M, N) - eps.eps0(N) * a.a1(mu, M, N);
            }
            out.a0(mu, M) = v0;

            for (int R = 0; R < D; ++R) {
                double v1 = deps.d1(mu, M, R);
                for (int N = 0; N < D; ++N) {
                    v1 += a.a1(mu, N, R) * eps.eps1(M, N) + 2.0 * a.a0(mu, N) * eps.eps2(M, N, R) -
                          eps.eps1(N, R) * a.a1(mu, M, N) - 2.0 * eps.eps0(N) * a.a2(mu, M, N, R);
                }
                out.a1(mu, M, R) = v1;

                for (int S = R; S < D; ++S) {
                    double v2 = deps.d2(mu, M, R, S);
                    for (int N = 0; N < D; ++N) {
                        v2 += a.a2(mu, N, R, S) * eps.eps1(M, N) +
                              a.a1(mu, N, R) * eps.eps2(M, N, S) +
                              a.a1(mu, N, S) * eps.eps2(M, N, R) -
                              eps.eps2(N, R, S) * a.a1(mu, M, N) -
                              eps.eps1(N, R) * a.a2(mu, M, N, S) -
                              eps.eps1(N, S) * a.a2(mu, M, N, R);
                    }
                    out.a2(mu, M, R, S) = v2;
                    out.a2(mu, M, S, R) = v2;
                }
            }
        }
    }
    return out;
}

FieldStrengthCoefficients gauge_vary_field_strength(const FieldStrengthCoefficients& f,
                                                    const GaugeParameterCoefficients& eps) {
    if (f.D != eps.D) throw InvalidArgument("gauge_vary_field_strength: dimension mismatch");
    require_constrained(f, "field strength coefficients");
    require_constrained(eps, "gauge parameter");
    const int D = f.D;
    FieldStrengthCoefficients out = FieldStrengthCoefficients::zeros(D);

    for (int p = 0; p < kPairCount; ++p) {
        for (int M = 0; M < D; ++M) {
            double v0 = 0.0;
            for (int N = 0; N < D; ++N) {
                v0 += f.f0(p, N) * eps.eps1(M, N) - eps.eps0(N) * f.f1(p, M, N);
            }
            out.f0(p, M) = v0;

            for (int R = 0; R < D; ++R) {
                double v1 = 0.0;
                for (int N = 0; N < D; ++N) {
                    v1 += f.f1(p, N, R) * eps.eps1(M, N) + 2.0 * f.f0(p, N) * eps.eps2(M, N, R) -
                          eps.eps1(N, R) * f.f1(p, M, N) - 2.0 * eps.eps0(N) * f.f2(p, M, N, R);
                }
                out.f1(p, M, R) = v1;

                for (int S = R; S < D; ++S) {
                    double v2 = 0.0;
                    for (int N = 0; N < D; ++N) {
                        v2 += f.f2(p, N, R, S) * eps.eps1(M, N) +
                              f.f1(p, N, R) * eps.eps2(M, N, S) +
                              f.f1(p, N, S) * eps.eps2(M, N, R) -
                              eps.eps2(N, R, S) * f.f1(p, M, N) -
                              eps.eps1(N, R) * f.f2(p, M, N, S) -
                              eps.eps1(N, S) * f.f2(p, M, N, R);
                    }
                    out.f2(p, M, R, S) = v2;
                    out.f2(p, M, S, R) = v2;
                }
            }
        }
    }
    return out;
}

MomentTensors cube_moments(int D, double l_P) {
    check_dim(D, "cube_moments");
    if (!(l_P > 0.0) || !std::isfinite(l_P)) {
        throw InvalidArgument("cube_moments requires a positive edge length");
    }
    MomentTensors m{D, 1.0, Tensor({D}), Tensor({D, D})};
    for (int k = 0; k < D; ++k) m.volume *= l_P;
    const double diag = m.volume * l_P * l_P / 12.0;
    for (int r = 0; r < D; ++r) m.m2(r, r) = diag;
    return m;
}

double effective_lagrangian(const FieldStrengthCoefficients& f, double g2,
                            const PhysicalConstants& consts) {
    if (!(g2 > 0.0)) throw InvalidArgument("effective_lagrangian requires g2 > 0");
    require_constrained(f, "field strength coefficients");
    const int D = f.D;
    const MomentTensors mom = cube_moments(D, consts.l_P);
    const double w1 = mom.m2(0, 0) / mom.volume; // l_P^2 / 12

    double t0 = 0.0;
    double t1 = 0.0;
    double t2 = 0.0;
    for (int p = 0; p < kPairCount; ++p) {
        const double sign = pair_metric_sign(p);
        for (int M = 0; M < D; ++M) {
            t0 += sign * f.f0(p, M) * f.f0(p, M);
            for (int R = 0; R < D; ++R) {
                t1 += sign * f.f1(p, M, R) * f.f1(p, M, R);
                t2 += sign * f.f0(p, M) * f.f2(p, M, R, R);
            }
        }
    }
    // Factor 2 restores the full mu,nu sum from the mu < nu pair sum.
    const double contraction = 2.0 * (t0 + w1 * t1 + 2.0 * w1 * t2);
    const double c4 = consts.c * consts.c * consts.c * consts.c;
    return -contraction * c4 / (4.0 * g2 * consts.G);
}

std::string second_order_rules_text() {
    return
        "Closed-form rules for the order-X^2 coefficient rows (everything of\n"
        "order X^3 and higher discarded; (R,S) symmetrized; sums over N).\n"
        "\n"
        "Composition  F = dA - dA + (A.grad)A - (A.grad)A:\n"
        "  f2_munu^M_RS = d_mu a2_nu^M_RS - d_nu a2_mu^M_RS\n"
        "               + a2_mu^N_RS a1_nu^M_N - a2_nu^N_RS a1_mu^M_N\n"
        "               + a1_mu^N_R a2_nu^M_NS + a1_mu^N_S a2_nu^M_NR\n"
        "               - a1_nu^N_R a2_mu^M_NS - a1_nu^N_S a2_mu^M_NR\n"
        "\n"
        "Gauge variation  delta A_mu = d_mu E + (A_mu.grad)E - (E.grad)A_mu:\n"
        "  delta a2_mu^M_RS = d_mu eps2^M_RS\n"
        "               + a2_mu^N_RS eps1^M_N - eps2^N_RS a1_mu^M_N\n"
        "               + a1_mu^N_R eps2^M_NS + a1_mu^N_S eps2^M_NR\n"
        "               - eps1^N_R a2_mu^M_NS - eps1^N_S a2_mu^M_NR\n"
        "\n"
        "Field-strength variation  delta F = (F.grad)E - (E.grad)F:\n"
        "  delta f2_munu^M_RS = f2^N_RS eps1^M_N - eps2^N_RS f1^M_N\n"
        "               + f1^N_R eps2^M_NS + f1^N_S eps2^M_NR\n"
        "               - eps1^N_R f2^M_NS - eps1^N_S f2^M_NR\n"
        "\n"
        "All three preserve the divergence-free traces sum_M (.)^M_M = 0 and\n"
        "sum_M (.)^M_MS = 0 identically: the bilinear terms cancel pairwise\n"
        "under relabeling of the summed inner indices.\n";
}

} // namespace isodyn
