#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "isodyn/constants.hpp"
#include "isodyn/errors.hpp"
#include "isodyn/trajectory.hpp"

using namespace isodyn;

namespace {

double dist(const Vec3& a, const Vec3& b) { return norm(a - b); }

} // namespace

TEST_CASE("at_rest pins the worldline to one point for all time") {
    const Vec3 spot{1.0, -2.0, 3.5};
    const auto tr = Trajectory::at_rest(spot);
    CHECK(tr.kind() == Trajectory::Kind::Static);
    CHECK(tr.max_speed() == 0.0);
    CHECK(tr.contains(-1e30));
    CHECK(tr.contains(1e30));
    for (double t : {-4.0e7, 0.0, 13.0}) {
        CHECK(dist(tr.position(t), spot) == 0.0);
        CHECK(norm(tr.velocity(t)) == 0.0);
        CHECK(norm(tr.acceleration(t)) == 0.0);
    }
}

TEST_CASE("uniform motion is linear in time about its anchor") {
    const PhysicalConstants k{};
    const Vec3 x0{10.0, 0.0, -5.0};
    const Vec3 v{3.0e6, -4.0e6, 1.2e7};
    const auto tr = Trajectory::uniform(x0, v, k, /*t0=*/5.0);
    CHECK(tr.kind() == Trajectory::Kind::Uniform);
    CHECK(tr.max_speed() == doctest::Approx(norm(v)).epsilon(1e-15));
    CHECK(dist(tr.position(5.0), x0) == 0.0);
    for (double t : {-2.0, 0.0, 8.25}) {
        CHECK(dist(tr.position(t), x0 + (t - 5.0) * v) == doctest::Approx(0.0));
        CHECK(dist(tr.velocity(t), v) == 0.0);
        CHECK(norm(tr.acceleration(t)) == 0.0);
    }

    CHECK_THROWS_AS(Trajectory::uniform(x0, Vec3{k.c, 0.0, 0.0}, k), InvalidArgument);
    CHECK_THROWS_AS(Trajectory::uniform(x0, Vec3{0.0, 1.1 * k.c, 0.0}, k), InvalidArgument);
    CHECK_NOTHROW(Trajectory::uniform(x0, Vec3{0.999 * k.c, 0.0, 0.0}, k));
}

TEST_CASE("circular motion stays on its circle with tangent velocity") {
    const PhysicalConstants k{};
    const Vec3 center{1.0, 2.0, 3.0};
    const double radius = 50.0;
    const double omega = 2.5e3;
    const double phase = 0.7;
    const auto tr = Trajectory::circular(center, radius, omega, k, phase);
    CHECK(tr.kind() == Trajectory::Kind::Circular);
    CHECK(tr.omega() == omega);
    CHECK(tr.radius() == radius);
    CHECK(tr.phase() == phase);
    CHECK(dist(tr.center(), center) == 0.0);
    CHECK(tr.max_speed() == doctest::Approx(radius * omega).epsilon(1e-15));

    for (double t : {0.0, 1.3e-4, 2.0e-3}) {
        const double ang = omega * t + phase;
        const Vec3 expect_pos = center + radius * Vec3{std::cos(ang), std::sin(ang), 0.0};
        const Vec3 expect_vel = radius * omega * Vec3{-std::sin(ang), std::cos(ang), 0.0};
        CHECK(dist(tr.position(t), expect_pos) < 1e-12 * radius);
        CHECK(dist(tr.velocity(t), expect_vel) < 1e-12 * radius * omega);
        // Centripetal: a = -omega^2 (y - center).
        const Vec3 expect_acc = -(omega * omega) * (expect_pos - center);
        CHECK(dist(tr.acceleration(t), expect_acc) < 1e-12 * radius * omega * omega);
        CHECK(norm(tr.position(t) - center) == doctest::Approx(radius).epsilon(1e-14));
    }

    CHECK_THROWS_AS(Trajectory::circular(center, 0.0, omega, k), InvalidArgument);
    CHECK_THROWS_AS(Trajectory::circular(center, -1.0, omega, k), InvalidArgument);
    // |omega| r >= c is rejected with a message naming the speed.
    try {
        Trajectory::circular(center, 1.0, k.c, k);
        FAIL("expected InvalidArgument");
    } catch (const InvalidArgument& err) {
        CHECK(std::string(err.what()).find("superluminal") != std::string::npos);
    }
    CHECK_NOTHROW(Trajectory::circular(center, 1.0, 0.0, k)); // degenerate but subluminal
}

TEST_CASE("tabulated interpolation reproduces a cubic worldline exactly") {
    const PhysicalConstants k{};
    // Per-component cubics; Hermite with exact node velocities is exact here.
    const auto pos = [](double t) {
        return Vec3{1.0 + 2.0 * t - t * t + 0.5 * t * t * t,
                    -3.0 + 0.25 * t * t,
                    4.0 * t - 0.125 * t * t * t};
    };
    const auto vel = [](double t) {
        return Vec3{2.0 - 2.0 * t + 1.5 * t * t,
                    0.5 * t,
                    4.0 - 0.375 * t * t};
    };
    const auto acc = [](double t) {
        return Vec3{-2.0 + 3.0 * t, 0.5, -0.75 * t};
    };

    std::vector<TrajectorySample> samples;
    for (double t : {0.0, 0.4, 1.1, 2.0}) samples.push_back({t, pos(t), vel(t)});
    const auto tr = Trajectory::tabulated(samples, k);
    CHECK(tr.kind() == Trajectory::Kind::Tabulated);
    CHECK(tr.samples().size() == 4);
    CHECK(tr.t_min() == 0.0);
    CHECK(tr.t_max() == 2.0);

    for (double t : {0.0, 0.2, 0.4, 0.77, 1.1, 1.5, 1.99, 2.0}) {
        CHECK(dist(tr.position(t), pos(t)) < 1e-12);
        CHECK(dist(tr.velocity(t), vel(t)) < 1e-11);
        CHECK(dist(tr.acceleration(t), acc(t)) < 1e-9);
    }

    // The domain is the closed sample range.
    CHECK(tr.contains(0.0));
    CHECK(tr.contains(2.0));
    CHECK(!tr.contains(2.0 + 1e-9));
    CHECK_THROWS_AS(tr.position(-0.1), DomainExceeded);
    CHECK_THROWS_AS(tr.velocity(2.1), DomainExceeded);
    CHECK_THROWS_AS(tr.acceleration(3.0), DomainExceeded);
}

TEST_CASE("tabulated factory rejects malformed sample lists") {
    const PhysicalConstants k{};
    CHECK_THROWS_AS(Trajectory::tabulated({}, k), InvalidArgument);
    CHECK_THROWS_AS(Trajectory::tabulated({{0.0, {}, {}}}, k), InvalidArgument);
    CHECK_THROWS_AS(Trajectory::tabulated({{0.0, {}, {}}, {0.0, {1, 0, 0}, {}}}, k),
                    InvalidArgument);
    CHECK_THROWS_AS(Trajectory::tabulated({{1.0, {}, {}}, {0.5, {1, 0, 0}, {}}}, k),
                    InvalidArgument);

    // Node speeds below c but an interior Hermite overshoot above c: with zero
    // end velocities the peak interior speed is 1.5 |dx| / dt.
    const double dt = 1.0;
    const Vec3 jump{0.9 * k.c * dt, 0.0, 0.0};
    CHECK_THROWS_AS(Trajectory::tabulated({{0.0, {}, {}}, {dt, jump, {}}}, k),
                    InvalidArgument);
    // A gentle jump with matching uniform velocities is fine.
    const Vec3 v{0.5 * k.c, 0.0, 0.0};
    CHECK_NOTHROW(Trajectory::tabulated({{0.0, {}, v}, {dt, dt * v, v}}, k));
}

TEST_CASE("max_speed bounds the sampled speed over the domain") {
    const PhysicalConstants k{};
    const auto circ = Trajectory::circular({0, 0, 0}, 2.0, 7.0, k, 0.3);
    for (int i = 0; i <= 40; ++i) {
        const double t = -1.0 + 2.0 * i / 40.0;
        CHECK(norm(circ.velocity(t)) <= circ.max_speed() * (1.0 + 1e-12));
    }

    std::vector<TrajectorySample> samples;
    for (double t : {0.0, 1.0, 2.5, 4.0}) {
        samples.push_back({t, Vec3{std::sin(t), t, 0.0}, Vec3{std::cos(t), 1.0, 0.0}});
    }
    const auto tab = Trajectory::tabulated(samples, k);
    for (int i = 0; i <= 40; ++i) {
        const double t = 4.0 * i / 40.0;
        CHECK(norm(tab.velocity(t)) <= tab.max_speed() * (1.0 + 1e-12));
    }
}
