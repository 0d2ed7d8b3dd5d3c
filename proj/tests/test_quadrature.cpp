#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "isodyn/errors.hpp"
#include "isodyn/quadrature.hpp"

using namespace isodyn;

namespace {
const double pi = std::acos(-1.0);
}

TEST_CASE("two-point rule has the closed-form nodes") {
    const GaussLegendreRule rule = gauss_legendre(2);
    REQUIRE(rule.nodes.size() == 2);
    CHECK(rule.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(rule.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(rule.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rule.weights[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("three-point rule has the closed-form nodes") {
    const GaussLegendreRule rule = gauss_legendre(3);
    REQUIRE(rule.nodes.size() == 3);
    CHECK(rule.nodes[0] == doctest::Approx(-std::sqrt(0.6)).epsilon(1e-15));
    CHECK(rule.nodes[1] == doctest::Approx(0.0).epsilon(1e-15));
    // Newton-refined weights agree with 5/9 and 8/9 to a few ulp.
    CHECK(rule.weights[0] == doctest::Approx(5.0 / 9.0).epsilon(1e-14));
    CHECK(rule.weights[1] == doctest::Approx(8.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("nodes are symmetric, ascending, with weights summing to 2") {
    for (const int n : {7, 16, 33, 64}) {
        const GaussLegendreRule rule = gauss_legendre(n);
        REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
        double wsum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            wsum += rule.weights[i];
            if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
            CHECK(rule.nodes[i] == doctest::Approx(-rule.nodes[rule.nodes.size() - 1 - i])
                                       .epsilon(1e-14));
        }
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    }
}

TEST_CASE("degree 2n-1 monomials integrate exactly") {
    const GaussLegendreRule rule = gauss_legendre(5);
    for (int deg = 0; deg <= 9; ++deg) {
        double quad = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            quad += rule.weights[i] * std::pow(rule.nodes[i], deg);
        }
        const double exact = deg % 2 == 0 ? 2.0 / (deg + 1) : 0.0;
        CHECK(quad == doctest::Approx(exact).epsilon(1e-14));
    }
    // Degree 2n is the first the rule misses.
    double quad = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        quad += rule.weights[i] * std::pow(rule.nodes[i], 10);
    }
    CHECK(std::abs(quad - 2.0 / 11.0) > 1e-6);
}

TEST_CASE("invalid orders are rejected") {
    CHECK_THROWS_AS(gauss_legendre(0), InvalidArgument);
    CHECK_THROWS_AS(gauss_legendre(-3), InvalidArgument);
}

TEST_CASE("sphere quadrature reproduces low moments") {
    CHECK(integrate_sphere([](const Vec3&) { return 1.0; }, 16, 32) ==
          doctest::Approx(4.0 * pi).epsilon(1e-14));
    CHECK(integrate_sphere([](const Vec3& n) { return n.z * n.z; }, 16, 32) ==
          doctest::Approx(4.0 * pi / 3.0).epsilon(1e-13));
    CHECK(integrate_sphere([](const Vec3& n) { return n.x * n.x * n.y * n.y; }, 24, 48) ==
          doctest::Approx(4.0 * pi / 15.0).epsilon(1e-13));
    CHECK(std::abs(integrate_sphere([](const Vec3& n) { return 3.0 * n.z * n.z - 1.0; }, 16,
                                    32)) < 1e-13);
    CHECK(std::abs(integrate_sphere([](const Vec3& n) { return n.x * n.y * n.z; }, 16, 32)) <
          1e-15);
}

TEST_CASE("sphere quadrature converges on a smooth non-polynomial") {
    const auto f = [](const Vec3& n) { return std::exp(n.z) / (2.0 - n.x); };
    const double coarse = integrate_sphere(f, 8, 16);
    const double mid = integrate_sphere(f, 16, 32);
    const double fine = integrate_sphere(f, 32, 64);
    CHECK(std::abs(mid - fine) < std::abs(coarse - fine));
    CHECK(std::abs(mid - fine) / std::abs(fine) < 1e-10);
}

TEST_CASE("sphere quadrature directions are unit vectors") {
    const double worst = integrate_sphere(
        [](const Vec3& n) { return std::abs(norm(n) - 1.0); }, 12, 24);
    CHECK(worst < 1e-13);
}
