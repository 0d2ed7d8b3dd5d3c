#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "isodyn/constants.hpp"
#include "isodyn/errors.hpp"
#include "isodyn/geometry.hpp"

using namespace isodyn;

namespace {

const PhysicalConstants kConsts{};

} // namespace

TEST_CASE("line element without a potential is the flat interval") {
    const auto state = ParticleState::from_coordinate({0, 0, 0}, {0, 0, 0}, 0.0, kConsts);
    Potentials none;
    none.D = 1;
    none.a0 = {0.0};
    none.a_spatial = {Vec3{}};
    const double dsigma = 2.0;
    const auto s = line_element(state, none, InnerVector::axis(1, 0) * kConsts.c, dsigma,
                                kConsts);
    CHECK(s.dsigma == dsigma);
    CHECK(s.gauge_part == 0.0);
    // At rest u.u = -c^2, so ds^2 = c^2 dsigma^2.
    CHECK(s.flat_part == doctest::Approx(kConsts.c * kConsts.c * 4.0).epsilon(1e-13));
    CHECK(s.ds2 == doctest::Approx(s.flat_part + s.gauge_part).epsilon(1e-15));
}

TEST_CASE("gauge part reproduces the static potential coupling") {
    // Probe at rest in the potential of a static source: the contraction
    // reduces to +2 a0 c (K0/m) dsigma^2 with K/m = -c for attraction.
    const auto tr = Trajectory::at_rest({0, 0, 0});
    const double m_src = 1.989e30;
    const double r = 1.495978707e11;
    const InnerVector k_src(1, {m_src * kConsts.c});
    const auto pot = lw_potential(k_src, tr, FourVector{0.0, r, 0.0, 0.0}, 1.0, kConsts);

    const auto state = ParticleState::from_coordinate({r, 0, 0}, {0, 0, 0}, 0.0, kConsts);
    const InnerVector qom = InnerVector::axis(1, 0) * (-kConsts.c);
    const auto s = line_element(state, pot, qom, 1.0, kConsts);

    // ds^2 = (1 - deficit) c^2 dsigma^2 exactly, by construction of the parts.
    const double deficit = static_clock_deficit(m_src, r, kConsts);
    CHECK(s.gauge_part ==
          doctest::Approx(-deficit * kConsts.c * kConsts.c).epsilon(1e-12));
    CHECK(s.ds2 ==
          doctest::Approx((1.0 - deficit) * kConsts.c * kConsts.c).epsilon(1e-14));
    // Flat and gauge parts add exactly.
    CHECK(s.ds2 == s.flat_part + s.gauge_part);

    Potentials wrong;
    wrong.D = 2;
    wrong.a0 = {0.0, 0.0};
    wrong.a_spatial = {Vec3{}, Vec3{}};
    CHECK_THROWS_AS(line_element(state, wrong, qom, 1.0, kConsts), InvalidArgument);
}

TEST_CASE("solar-distance clock deficit is about 2e-8") {
    // Sun mass seen from 1 au.
    const double deficit = static_clock_deficit(1.989e30, 1.495978707e11, kConsts);
    CHECK(deficit == doctest::Approx(1.9747e-8).epsilon(1e-4));
    CHECK(std::abs(deficit - 1.97e-8) < 1e-10);

    // Linear in the mass, inverse in the radius.
    CHECK(static_clock_deficit(2.0 * 1.989e30, 1.495978707e11, kConsts) ==
          doctest::Approx(2.0 * deficit).epsilon(1e-15));
    CHECK(static_clock_deficit(1.989e30, 2.0 * 1.495978707e11, kConsts) ==
          doctest::Approx(0.5 * deficit).epsilon(1e-15));
    CHECK(static_clock_deficit(0.0, 1.0, kConsts) == 0.0);
}

TEST_CASE("clock factor is sqrt(1 - deficit) down to the degenerate radius") {
    const double m = 1.989e30;
    const double r = 1.495978707e11;
    const double factor = static_clock_factor(m, r, kConsts);
    CHECK(factor == doctest::Approx(std::sqrt(1.0 - static_clock_deficit(m, r, kConsts)))
                        .epsilon(1e-15));
    CHECK(factor < 1.0);
    CHECK(factor > 1.0 - 1.0e-8);

    // The degenerate radius for the Sun is about 2.95 km.
    const double r_d = 2.0 * kConsts.G * m / (kConsts.c * kConsts.c);
    CHECK(r_d == doctest::Approx(2954.13).epsilon(1e-4));
    CHECK_THROWS_AS(static_clock_factor(m, r_d, kConsts), InvalidArgument);
    CHECK_THROWS_AS(static_clock_factor(m, 0.5 * r_d, kConsts), InvalidArgument);
    CHECK_NOTHROW(static_clock_factor(m, 1.001 * r_d, kConsts));

    CHECK_THROWS_AS(static_clock_deficit(-1.0, 1.0, kConsts), InvalidArgument);
    CHECK_THROWS_AS(static_clock_deficit(1.0, 0.0, kConsts), InvalidArgument);
}

TEST_CASE("line element clock rate matches the closed-form factor") {
    // sqrt(ds^2) / (c dsigma) for a static probe equals the clock factor.
    const auto tr = Trajectory::at_rest({0, 0, 0});
    const double m_src = 5.0e29;
    const double r = 3.0e10;
    const InnerVector k_src(1, {m_src * kConsts.c});
    const auto pot = lw_potential(k_src, tr, FourVector{0.0, 0.0, r, 0.0}, 1.0, kConsts);
    const auto state = ParticleState::from_coordinate({0.0, r, 0.0}, {0, 0, 0}, 0.0, kConsts);
    const auto s = line_element(state, pot, InnerVector::axis(1, 0) * (-kConsts.c), 1.0,
                                kConsts);
    const double rate = std::sqrt(s.ds2) / kConsts.c;
    CHECK(rate == doctest::Approx(static_clock_factor(m_src, r, kConsts)).epsilon(1e-12));
}
