#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "isodyn/constants.hpp"
#include "isodyn/taylor_gauge.hpp"

namespace isodyn {

/// Outcome of one invariant check of the verification suite.
struct CheckResult {
    std::string name;
    bool passed = false;
    double worst = 0.0;     ///< worst observed violation, in the check's own measure
    double tolerance = 0.0; ///< threshold the violation was compared against
    std::string detail;     ///< sample counts / configuration, for replay
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    int D = 4;
    double g2_over_4pi = 1.0;
    PhysicalConstants consts{};
    /// Acceptance-grade sample counts (slower); the default keeps the whole
    /// suite interactive.
    bool thorough = false;
};

/// Runs every invariant check across all modules.  Deterministic for a fixed
/// seed.  Individual failures are reported, never thrown.
std::vector<CheckResult> run_verification_suite(const VerifyOptions& opt);

bool all_passed(const std::vector<CheckResult>& checks);

// --- building blocks shared with the test suites ---------------------------

/// Random coefficient sets whose divergence traces are zero exactly (the
/// balancing entry is accumulated in the same order the validators use).
GaugeParameterCoefficients random_constrained_parameter(std::mt19937_64& rng, int D);
GaugeParameterDerivatives random_constrained_parameter_derivatives(std::mt19937_64& rng, int D);
GaugeCoefficients random_constrained_gauge(std::mt19937_64& rng, int D);
GaugeDerivatives random_constrained_gauge_derivatives(std::mt19937_64& rng, int D);
FieldStrengthCoefficients random_constrained_field_strength(std::mt19937_64& rng, int D);

/// Variation of the spacetime-derivative coefficients induced by
/// gauge_vary_gauge, by the product rule; second spacetime derivatives of the
/// parameter are taken as zero (a free jet choice both sides agree on).
GaugeDerivatives vary_gauge_derivatives(const GaugeDerivatives& da, const GaugeCoefficients& a,
                                        const GaugeParameterCoefficients& eps,
                                        const GaugeParameterDerivatives& deps);

struct MismatchStats {
    double worst_rel = 0.0;   ///< worst relative component mismatch
    double worst_trace = 0.0; ///< worst output trace violation / max(1, scale)
    int samples = 0;
};

/// gauge_vary_field_strength versus the exact directional derivative of
/// field_strength_from_gauge along gauge_vary_gauge, on the truncation-exact
/// subspace a2 = 0, eps2 = 0 (f0 and f1 rows).
MismatchStats gauge_variation_mismatch(std::uint64_t seed, int D, int n_sets);

/// Same comparison on the two restricted families that keep truncation exact
/// while exercising the second-order rows: full coefficients with eps0 =
/// eps2 = 0, and a2 = 0 with the full parameter.
MismatchStats gauge_variation_mismatch_second_order(std::uint64_t seed, int D, int n_sets);

/// field_strength_from_gauge versus a generic polynomial-convolution oracle,
/// evaluated at random X inside the unit cube.  Covers the composition rows
/// through an independent code path (monomial products, then truncation).
double taylor_reconstruction_mismatch(std::uint64_t seed, int D, int n_sets, int n_x_samples);

/// effective_lagrangian versus per-axis Gauss-Legendre cube quadrature of the
/// truncated squared field strength.
double lagrangian_quadrature_mismatch(std::uint64_t seed, int D, double g2_over_4pi,
                                      const PhysicalConstants& consts, int n_sets);

/// Sphere quadrature of the angular power distribution versus the closed-form
/// total power, for random kinematic states with |v_hat| <= v_max.
double larmor_closure_mismatch(std::uint64_t seed, int n_states, double v_max,
                               const PhysicalConstants& consts);

} // namespace isodyn
