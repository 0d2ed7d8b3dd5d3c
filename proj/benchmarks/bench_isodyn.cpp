#include <benchmark/benchmark.h>

#include <random>

#include "isodyn/constants.hpp"
#include "isodyn/dynamics.hpp"
#include "isodyn/radiation.hpp"
#include "isodyn/retarded_field.hpp"
#include "isodyn/taylor_gauge.hpp"
#include "isodyn/verification.hpp"

namespace {

using namespace isodyn;

const PhysicalConstants kConsts{};

Trajectory orbit_source() {
    return Trajectory::circular({0, 0, 0}, 1.0, 1.0e6, kConsts);
}

void BM_retarded_time(benchmark::State& state) {
    const auto tr = orbit_source();
    const FourVector x{0.0, 5.0e3, 2.0e3, -1.0e3};
    for (auto _ : state) {
        benchmark::DoNotOptimize(retarded_time(tr, x, kConsts));
    }
}
BENCHMARK(BM_retarded_time);

void BM_field_components(benchmark::State& state) {
    const auto tr = orbit_source();
    const InnerVector k(4, {kConsts.c, 0.0, 0.0, 0.0});
    const FourVector x{0.0, 5.0e3, 2.0e3, -1.0e3};
    for (auto _ : state) {
        benchmark::DoNotOptimize(field_components(k, tr, x, 1.0, kConsts));
    }
}
BENCHMARK(BM_field_components);

void BM_integrate_motion_step(benchmark::State& state) {
    // One RK4 step in the field of a static source, per iteration.
    const auto src = Trajectory::at_rest({0, 0, 0});
    const InnerVector k_src(1, {1.0e30 * kConsts.c});
    const auto field = [&](const FourVector& x) {
        return field_tensor(field_components(k_src, src, x, 1.0, kConsts));
    };
    const auto probe = ChargedParticle::mass_locked(1.0, InnerVector(1, {-1.0}), kConsts,
                                                    "probe");
    const auto initial =
        ParticleState::from_coordinate({1.0e12, 0, 0}, {0, 8.17e3, 0}, 0.0, kConsts);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            integrate_motion(initial, probe, field, 1.0e3, 1, kConsts));
    }
}
BENCHMARK(BM_integrate_motion_step);

void BM_sphere_flux(benchmark::State& state) {
    const OrbitConfig orbit{1.0, 1.0, 0.3};
    const double omega = orbit.v_hat * kConsts.c / orbit.radius;
    const auto tr = Trajectory::circular({0, 0, 0}, orbit.radius, omega, kConsts);
    const InnerVector k(1, {orbit.mass * kConsts.c});
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            flux_sphere_integral(k, tr, 0.0, 1.0e4, 1.0, kConsts, 16));
    }
}
BENCHMARK(BM_sphere_flux);

void BM_field_strength_from_gauge(benchmark::State& state) {
    const int D = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    const auto a = random_constrained_gauge(rng, D);
    const auto da = random_constrained_gauge_derivatives(rng, D);
    for (auto _ : state) {
        benchmark::DoNotOptimize(field_strength_from_gauge(a, da));
    }
}
BENCHMARK(BM_field_strength_from_gauge)->Arg(2)->Arg(4)->Arg(8);

void BM_effective_lagrangian(benchmark::State& state) {
    const int D = static_cast<int>(state.range(0));
    std::mt19937_64 rng(11);
    const auto f = random_constrained_field_strength(rng, D);
    for (auto _ : state) {
        benchmark::DoNotOptimize(effective_lagrangian(f, 4.0 * 3.14159265358979, kConsts));
    }
}
BENCHMARK(BM_effective_lagrangian)->Arg(2)->Arg(4)->Arg(8);

} // namespace

BENCHMARK_MAIN();
