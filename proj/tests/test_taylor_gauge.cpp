#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "isodyn/constants.hpp"
#include "isodyn/errors.hpp"
#include "isodyn/taylor_gauge.hpp"
#include "isodyn/verification.hpp"

using namespace isodyn;

TEST_CASE("pair indexing follows the fixed (01,02,03,12,13,23) order") {
    const int expect_mu[6] = {0, 0, 0, 1, 1, 2};
    const int expect_nu[6] = {1, 2, 3, 2, 3, 3};
    CHECK(kPairCount == 6);
    for (int p = 0; p < kPairCount; ++p) {
        int mu = -1, nu = -1;
        pair_members(p, mu, nu);
        CHECK(mu == expect_mu[p]);
        CHECK(nu == expect_nu[p]);
        CHECK(pair_index(mu, nu) == p);
    }
    // eta^mumu eta^nunu: -1 whenever the pair contains the time axis.
    CHECK(pair_metric_sign(0) == -1.0);
    CHECK(pair_metric_sign(1) == -1.0);
    CHECK(pair_metric_sign(2) == -1.0);
    CHECK(pair_metric_sign(3) == 1.0);
    CHECK(pair_metric_sign(4) == 1.0);
    CHECK(pair_metric_sign(5) == 1.0);

    CHECK_THROWS_AS(pair_index(1, 1), InvalidArgument);
    CHECK_THROWS_AS(pair_index(2, 0), InvalidArgument);
    CHECK_THROWS_AS(pair_index(0, 4), InvalidArgument);
    CHECK_THROWS_AS(pair_metric_sign(6), InvalidArgument);
    int mu, nu;
    CHECK_THROWS_AS(pair_members(-1, mu, nu), InvalidArgument);
}

TEST_CASE("coefficient containers have the documented shapes") {
    const int D = 3;
    const auto a = GaugeCoefficients::zeros(D);
    CHECK(a.a0.size() == 4u * D);
    CHECK(a.a1.size() == 4u * D * D);
    CHECK(a.a2.size() == 4u * D * D * D);
    const auto da = GaugeDerivatives::zeros(D);
    CHECK(da.d0.size() == 16u * D);
    CHECK(da.d2.size() == 16u * D * D * D);
    const auto f = FieldStrengthCoefficients::zeros(D);
    CHECK(f.f0.size() == 6u * D);
    CHECK(f.f1.size() == 6u * D * D);
    CHECK(f.f2.size() == 6u * D * D * D);
    const auto e = GaugeParameterCoefficients::zeros(D);
    CHECK(e.eps0.size() == static_cast<std::size_t>(D));
    CHECK(e.eps2.size() == static_cast<std::size_t>(D) * D * D);
}

TEST_CASE("coefficient arithmetic is elementwise") {
    std::mt19937_64 rng(91);
    const auto a = random_constrained_gauge(rng, 2);
    const auto twice = 2.0 * a;
    const auto sum = a + a;
    CHECK((twice.a0 - sum.a0).max_abs() == 0.0);
    CHECK((twice.a1 - sum.a1).max_abs() == 0.0);
    CHECK((twice.a2 - sum.a2).max_abs() == 0.0);
    const auto back = twice - a; // 2x - x is exact in binary floating point
    CHECK((back.a1 - a.a1).max_abs() == 0.0);

    const auto f = random_constrained_field_strength(rng, 2);
    const auto fsum = f + f;
    CHECK((fsum.f2 - (2.0 * f).f2).max_abs() == 0.0);
    const auto fzero = f - f;
    CHECK(fzero.f0.max_abs() == 0.0);
}

TEST_CASE("random constrained sets satisfy the divergence traces exactly") {
    std::mt19937_64 rng(2026);
    for (int D = 1; D <= 8; ++D) {
        CHECK(trace_violation(random_constrained_parameter(rng, D)) == 0.0);
        CHECK(trace_violation(random_constrained_parameter_derivatives(rng, D)) == 0.0);
        CHECK(trace_violation(random_constrained_gauge(rng, D)) == 0.0);
        CHECK(trace_violation(random_constrained_gauge_derivatives(rng, D)) == 0.0);
    }
}

TEST_CASE("trace_violation reports the size of a planted violation") {
    auto a = GaugeCoefficients::zeros(2);
    a.a1(0, 0, 0) = 0.5; // divergence trace sum_M a1^M_M = 0.5
    CHECK(trace_violation(a) == doctest::Approx(0.5).epsilon(1e-15));

    auto da = GaugeDerivatives::zeros(2);
    da.d2(1, 0, 0, 0, 1) = -0.25;
    da.d2(1, 0, 0, 1, 0) = -0.25;
    CHECK(trace_violation(da) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("require_constrained names the offending object") {
    auto f = FieldStrengthCoefficients::zeros(1);
    f.f1(0, 0, 0) = 1.0; // the only D=1 entry is its own trace
    try {
        require_constrained(f, "unit test field");
        FAIL("expected ConstraintViolation");
    } catch (const ConstraintViolation& err) {
        const std::string msg = err.what();
        CHECK(msg.find("unit test field") != std::string::npos);
    }

    auto da = GaugeDerivatives::zeros(2);
    da.d1(3, 2, 1, 1) = 2.0;
    CHECK_THROWS_AS(require_constrained(da, "derivatives"), ConstraintViolation);
}

TEST_CASE("decompose_sym_antisym splits a matrix into its three parts") {
    Tensor t({2, 2});
    t(0, 0) = 1.0;
    t(0, 1) = 2.0;
    t(1, 0) = 4.0;
    t(1, 1) = 3.0;
    const auto parts = decompose_sym_antisym(t);
    CHECK(parts.D == 2);
    CHECK(parts.trace == doctest::Approx(4.0));
    CHECK(parts.antisymmetric(0, 1) == doctest::Approx(-1.0));
    CHECK(parts.antisymmetric(1, 0) == doctest::Approx(1.0));
    CHECK(parts.antisymmetric(0, 0) == 0.0);
    CHECK(parts.symmetric_traceless(0, 0) == doctest::Approx(-1.0));
    CHECK(parts.symmetric_traceless(0, 1) == doctest::Approx(3.0));
    CHECK(parts.symmetric_traceless(1, 0) == doctest::Approx(3.0));
    CHECK(parts.symmetric_traceless(1, 1) == doctest::Approx(1.0));
    // Reconstruction: t = antisym + traceless sym + (trace/D) I.
    for (int r = 0; r < 2; ++r) {
        for (int s = 0; s < 2; ++s) {
            const double rebuilt = parts.antisymmetric(r, s) + parts.symmetric_traceless(r, s) +
                                   (r == s ? parts.trace / 2.0 : 0.0);
            CHECK(rebuilt == doctest::Approx(t(r, s)).epsilon(1e-15));
        }
    }
    CHECK(parts.symmetric_traceless(0, 0) + parts.symmetric_traceless(1, 1) ==
          doctest::Approx(0.0));

    Tensor bad({2, 3});
    CHECK_THROWS_AS(decompose_sym_antisym(bad), InvalidArgument);
    Tensor rank1({4});
    CHECK_THROWS_AS(decompose_sym_antisym(rank1), InvalidArgument);
}

// Sparse D=2 configuration worked out by hand against the composition rule
//   F_munu = d_mu A_nu - d_nu A_mu + (A_mu . grad) A_nu - (A_nu . grad) A_mu.
// Surviving entries: f0(01)^0 = r + p s and f1(01)^0_1 = 2 s u.
TEST_CASE("field strength composition matches a hand-computed sparse case") {
    const double p = 0.7, s = 0.3, u = 0.5, r = -0.2;
    auto a = GaugeCoefficients::zeros(2);
    a.a0(0, 0) = p;
    a.a1(0, 0, 1) = u;
    a.a1(1, 0, 0) = s;
    a.a1(1, 1, 1) = -s;
    auto da = GaugeDerivatives::zeros(2);
    da.d0(0, 1, 0) = r;

    const auto f = field_strength_from_gauge(a, da);
    CHECK(f.f0(0, 0) == doctest::Approx(r + p * s).epsilon(1e-14));
    CHECK(f.f1(0, 0, 1) == doctest::Approx(2.0 * s * u).epsilon(1e-14));
    // Every other entry vanishes term by term.
    CHECK(f.f0(0, 1) == 0.0);
    CHECK(f.f1(0, 0, 0) == 0.0);
    CHECK(f.f1(0, 1, 1) == 0.0);
    CHECK(f.f2.max_abs() == 0.0);
    for (int q = 1; q < kPairCount; ++q) {
        for (int M = 0; M < 2; ++M) CHECK(f.f0(q, M) == 0.0);
    }
}

TEST_CASE("pure derivative input reproduces the curl rows") {
    const int D = 3;
    std::mt19937_64 rng(7);
    const auto a = GaugeCoefficients::zeros(D);
    const auto da = random_constrained_gauge_derivatives(rng, D);
    const auto f = field_strength_from_gauge(a, da);
    for (int pidx = 0; pidx < kPairCount; ++pidx) {
        int mu, nu;
        pair_members(pidx, mu, nu);
        for (int M = 0; M < D; ++M) {
            CHECK(f.f0(pidx, M) == da.d0(mu, nu, M) - da.d0(nu, mu, M));
            for (int R = 0; R < D; ++R) {
                CHECK(f.f1(pidx, M, R) == da.d1(mu, nu, M, R) - da.d1(nu, mu, M, R));
                for (int S = 0; S < D; ++S) {
                    CHECK(f.f2(pidx, M, R, S) ==
                          da.d2(mu, nu, M, R, S) - da.d2(nu, mu, M, R, S));
                }
            }
        }
    }
}

TEST_CASE("field strength rejects mismatched dimensions and broken traces") {
    const auto a2 = GaugeCoefficients::zeros(2);
    const auto da3 = GaugeDerivatives::zeros(3);
    CHECK_THROWS_AS(field_strength_from_gauge(a2, da3), InvalidArgument);

    auto bad = GaugeCoefficients::zeros(2);
    bad.a1(0, 0, 0) = 1.0;
    CHECK_THROWS_AS(field_strength_from_gauge(bad, GaugeDerivatives::zeros(2)),
                    ConstraintViolation);
}

TEST_CASE("gauge variation of the gauge field matches a hand-computed case") {
    const double p = 0.7, s = 0.3, u = 0.5;
    auto a = GaugeCoefficients::zeros(2);
    a.a0(0, 0) = p;
    a.a1(0, 0, 1) = u;
    a.a1(1, 0, 0) = s;
    a.a1(1, 1, 1) = -s;
    auto eps = GaugeParameterCoefficients::zeros(2);
    eps.eps0(0) = 0.4;
    eps.eps0(1) = 0.15;
    eps.eps1(0, 1) = 0.25;
    const auto deps = GaugeParameterDerivatives::zeros(2);

    const auto d = gauge_vary_gauge(a, eps, deps);
    CHECK(d.a0(0, 0) == doctest::Approx(-0.15 * u).epsilon(1e-14));
    CHECK(d.a0(0, 1) == 0.0);
    CHECK(d.a0(1, 0) == doctest::Approx(-0.4 * s).epsilon(1e-14));
    CHECK(d.a0(1, 1) == doctest::Approx(0.15 * s).epsilon(1e-14));
    CHECK(d.a1(1, 0, 1) == doctest::Approx(-2.0 * s * 0.25).epsilon(1e-14));
    CHECK(d.a1(0, 0, 1) == 0.0);
    CHECK(d.a1(1, 0, 0) == 0.0);
    CHECK(d.a2.max_abs() == 0.0);
    // The variation of a constrained field stays constrained.
    CHECK(trace_violation(d) == doctest::Approx(0.0).epsilon(1e-15));

    // Inhomogeneous term: with a = 0 the variation is just d_mu E.
    std::mt19937_64 rng(12);
    const auto dran = random_constrained_parameter_derivatives(rng, 2);
    const auto shift = gauge_vary_gauge(GaugeCoefficients::zeros(2),
                                        GaugeParameterCoefficients::zeros(2), dran);
    for (int mu = 0; mu < 4; ++mu) {
        for (int M = 0; M < 2; ++M) {
            CHECK(shift.a0(mu, M) == dran.d0(mu, M));
            for (int R = 0; R < 2; ++R) {
                CHECK(shift.a1(mu, M, R) == dran.d1(mu, M, R));
            }
        }
    }
}

TEST_CASE("gauge variation of the field strength matches a hand-computed case") {
    auto f = FieldStrengthCoefficients::zeros(2);
    f.f0(0, 0) = 0.01;
    f.f1(0, 0, 1) = 0.3;
    auto eps = GaugeParameterCoefficients::zeros(2);
    eps.eps0(0) = 0.4;
    eps.eps0(1) = 0.15;
    eps.eps1(0, 1) = 0.25;

    const auto d = gauge_vary_field_strength(f, eps);
    CHECK(d.f0(0, 0) == doctest::Approx(-0.15 * 0.3).epsilon(1e-14));
    CHECK(d.f0(0, 1) == 0.0);
    CHECK(d.f1.max_abs() == 0.0);
    CHECK(d.f2.max_abs() == 0.0);

    // The variation is homogeneous: a vanishing parameter gives zero.
    std::mt19937_64 rng(3);
    const auto g = random_constrained_field_strength(rng, 4);
    const auto none = gauge_vary_field_strength(g, GaugeParameterCoefficients::zeros(4));
    CHECK(none.f0.max_abs() == 0.0);
    CHECK(none.f1.max_abs() == 0.0);
    CHECK(none.f2.max_abs() == 0.0);

    CHECK_THROWS_AS(gauge_vary_field_strength(g, GaugeParameterCoefficients::zeros(2)),
                    InvalidArgument);
}

TEST_CASE("variation of the composition equals the composition of variations") {
    // First order in the parameter, on the truncation-exact subspace.
    const auto first = gauge_variation_mismatch(2026, 4, 8);
    CHECK(first.samples == 8);
    CHECK(first.worst_rel < 1e-12);
    CHECK(first.worst_trace < 1e-13);
    // Second-order rows through the two restricted families.
    const auto second = gauge_variation_mismatch_second_order(77, 3, 8);
    CHECK(second.worst_rel < 1e-12);
    CHECK(second.worst_trace < 1e-13);
}

TEST_CASE("truncated composition agrees with a polynomial oracle at sample points") {
    CHECK(taylor_reconstruction_mismatch(11, 3, 3, 10) < 1e-12);
    CHECK(taylor_reconstruction_mismatch(12, 1, 2, 10) < 1e-12);
}

TEST_CASE("cube moments are the closed-form volume and inertia values") {
    const auto m3 = cube_moments(3, 2.0);
    CHECK(m3.volume == doctest::Approx(8.0).epsilon(1e-15));
    CHECK(m3.m1.max_abs() == 0.0);
    for (int R = 0; R < 3; ++R) {
        for (int S = 0; S < 3; ++S) {
            const double expect = (R == S) ? 32.0 / 12.0 : 0.0;
            CHECK(m3.m2(R, S) == doctest::Approx(expect).epsilon(1e-14));
        }
    }
    const auto m1d = cube_moments(1, 0.5);
    CHECK(m1d.volume == doctest::Approx(0.5));
    CHECK(m1d.m2(0, 0) == doctest::Approx(0.125 / 12.0).epsilon(1e-14));

    CHECK_THROWS_AS(cube_moments(0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(cube_moments(3, 0.0), InvalidArgument);
    CHECK_THROWS_AS(cube_moments(3, -1.0), InvalidArgument);
}

TEST_CASE("effective Lagrangian reproduces hand-contracted sparse inputs") {
    const PhysicalConstants k{};
    const double c4 = k.c * k.c * k.c * k.c;

    // Constant time-space field strength: L = +f^2 c^4 / (2 g2 G) per component.
    auto f = FieldStrengthCoefficients::zeros(1);
    f.f0(0, 0) = 3.0;
    CHECK(effective_lagrangian(f, 2.0, k) ==
          doctest::Approx(2.25 * c4 / k.G).epsilon(1e-14));

    // The same magnitude on a space-space pair flips the overall sign.
    auto g = FieldStrengthCoefficients::zeros(1);
    g.f0(5, 0) = 3.0;
    CHECK(effective_lagrangian(g, 2.0, k) ==
          doctest::Approx(-2.25 * c4 / k.G).epsilon(1e-14));

    // Pure gradient row picks up the cube inertia weight l_P^2 / 12.
    auto h = FieldStrengthCoefficients::zeros(2);
    h.f1(0, 0, 1) = 2.0;
    CHECK(effective_lagrangian(h, 1.0, k) ==
          doctest::Approx(k.l_P * k.l_P * c4 / (6.0 * k.G)).epsilon(1e-13));

    // Cross term f0 . tr f2 carries twice that weight.
    const auto mom = cube_moments(2, k.l_P);
    const double w1 = mom.m2(0, 0) / mom.volume;
    auto x = FieldStrengthCoefficients::zeros(2);
    x.f0(5, 0) = 1.0;
    x.f2(5, 0, 0, 0) = 1.0 / (2.0 * w1);
    x.f2(5, 1, 1, 0) = -1.0 / (2.0 * w1);
    x.f2(5, 1, 0, 1) = -1.0 / (2.0 * w1);
    CHECK(effective_lagrangian(x, 1.0, k) ==
          doctest::Approx(-c4 / k.G).epsilon(1e-13));

    CHECK_THROWS_AS(effective_lagrangian(f, 0.0, k), InvalidArgument);
    auto bad = FieldStrengthCoefficients::zeros(1);
    bad.f1(0, 0, 0) = 1.0;
    CHECK_THROWS_AS(effective_lagrangian(bad, 1.0, k), ConstraintViolation);
}

TEST_CASE("effective Lagrangian matches direct cube quadrature") {
    const PhysicalConstants k{};
    CHECK(lagrangian_quadrature_mismatch(5, 2, 1.0, k, 3) < 1e-10);
}

TEST_CASE("rule summary text names both transformation and composition") {
    const std::string text = second_order_rules_text();
    CHECK(!text.empty());
    CHECK(text.find("Composition") != std::string::npos);
    CHECK(text.find("delta") != std::string::npos);
    CHECK(text.find("f2") != std::string::npos);
}
