#pragma once

#include <string>

#include "isodyn/constants.hpp"
#include "isodyn/tensor.hpp"

namespace isodyn {

// ---------------------------------------------------------------------------
// Gauge fields over the inner space are truncated Taylor polynomials in the
// inner coordinate X:
//
//   A_mu^M(x, X) = a0_mu^M(x) + a1_mu^M_N(x) X^N + a2_mu^M_(NS)(x) X^N X^S
//
// and likewise for the gauge parameter E^M(x, X) and the field strength
// F_munu^M(x, X).  Everything of order X^3 and higher is discarded.  The
// volume-preserving constraint makes each coefficient divergence-free in its
// first inner index:
//
//   sum_M a1_mu^M_M = 0        and        sum_M a2_mu^M_(MS) = 0  for all S,
//
// with identical conditions on the eps and f coefficients.  Second-order
// coefficients are stored as full D x D symmetric matrices in (R, S).
// ---------------------------------------------------------------------------

/// Number of independent antisymmetric spacetime index pairs (mu < nu).
inline constexpr int kPairCount = 6;

/// Index of the ordered pair (mu, nu), mu < nu, in the fixed order
/// (01, 02, 03, 12, 13, 23).
int pair_index(int mu, int nu);

/// The (mu, nu) pair stored at index p.
void pair_members(int p, int& mu, int& nu);

/// eta^mumu eta^nunu for the pair p: -1 for time-space pairs, +1 otherwise.
double pair_metric_sign(int p);

/// Taylor coefficients of the gauge parameter E^M(X).
struct GaugeParameterCoefficients {
    int D = 0;
    Tensor eps0; ///< [M]
    Tensor eps1; ///< [M][N]
    Tensor eps2; ///< [M][R][S], symmetric in (R, S)

    static GaugeParameterCoefficients zeros(int D);
};

/// Spacetime derivatives d_mu of the gauge parameter coefficients.
struct GaugeParameterDerivatives {
    int D = 0;
    Tensor d0; ///< [mu][M]
    Tensor d1; ///< [mu][M][N]
    Tensor d2; ///< [mu][M][R][S]

    static GaugeParameterDerivatives zeros(int D);
};

/// Taylor coefficients of the gauge field A_mu^M(X).  a0 is dimensionless,
/// a1 carries 1/m, a2 carries 1/m^2 (per inner power of X).
struct GaugeCoefficients {
    int D = 0;
    Tensor a0; ///< [mu][M]
    Tensor a1; ///< [mu][M][N]
    Tensor a2; ///< [mu][M][R][S], symmetric in (R, S)

    static GaugeCoefficients zeros(int D);
};

GaugeCoefficients operator+(GaugeCoefficients a, const GaugeCoefficients& b);
GaugeCoefficients operator-(GaugeCoefficients a, const GaugeCoefficients& b);
GaugeCoefficients operator*(double s, GaugeCoefficients a);

/// Spacetime derivatives d_mu a_nu^... ; first index is the derivative
/// direction mu, second the spacetime index nu of the field.
struct GaugeDerivatives {
    int D = 0;
    Tensor d0; ///< [mu][nu][M]
    Tensor d1; ///< [mu][nu][M][N]
    Tensor d2; ///< [mu][nu][M][R][S]

    static GaugeDerivatives zeros(int D);
};

GaugeDerivatives operator+(GaugeDerivatives a, const GaugeDerivatives& b);
GaugeDerivatives operator-(GaugeDerivatives a, const GaugeDerivatives& b);
GaugeDerivatives operator*(double s, GaugeDerivatives a);

/// Taylor coefficients of the field strength F_munu^M(X), stored on the six
/// antisymmetric pairs mu < nu.
struct FieldStrengthCoefficients {
    int D = 0;
    Tensor f0; ///< [p][M]
    Tensor f1; ///< [p][M][R]
    Tensor f2; ///< [p][M][R][S], symmetric in (R, S)

    static FieldStrengthCoefficients zeros(int D);
};

FieldStrengthCoefficients operator+(FieldStrengthCoefficients a,
                                    const FieldStrengthCoefficients& b);
FieldStrengthCoefficients operator-(FieldStrengthCoefficients a,
                                    const FieldStrengthCoefficients& b);
FieldStrengthCoefficients operator*(double s, FieldStrengthCoefficients a);

/// Moments of the inner coordinate over the centered cube of edge l_P.
struct MomentTensors {
    int D = 0;
    double volume = 0.0; ///< l_P^D
    Tensor m1;           ///< [R], all zero by symmetry
    Tensor m2;           ///< [R][S] = delta_RS l_P^(D+2) / 12
};

/// Decomposition of a D x D matrix into antisymmetric part, traceless
/// symmetric part and trace.
struct SymAntisymParts {
    int D = 0;
    Tensor antisymmetric;
    Tensor symmetric_traceless;
    double trace = 0.0;
};

// --- validation ------------------------------------------------------------

/// Trace-constraint tolerance, relative to the largest coefficient magnitude.
/// Chained algebra leaves residuals near 1e-16 relative; genuine violations
/// are usually order one, so 1e-9 separates the two cleanly.
inline constexpr double kTraceTol = 1e-9;

/// Largest absolute divergence trace over all constraints of the object.
double trace_violation(const GaugeParameterCoefficients& e);
double trace_violation(const GaugeParameterDerivatives& de);
double trace_violation(const GaugeCoefficients& a);
double trace_violation(const GaugeDerivatives& da);
double trace_violation(const FieldStrengthCoefficients& f);

/// Largest absolute (R,S)-symmetry defect of the second-order coefficients.
double symmetry_violation(const GaugeParameterCoefficients& e);
double symmetry_violation(const GaugeParameterDerivatives& de);
double symmetry_violation(const GaugeCoefficients& a);
double symmetry_violation(const GaugeDerivatives& da);
double symmetry_violation(const FieldStrengthCoefficients& f);

/// Throws ConstraintViolation if traces or symmetry exceed kTraceTol times the
/// coefficient scale.  `what` names the offending argument in the message.
void require_constrained(const GaugeParameterCoefficients& e, const char* what);
void require_constrained(const GaugeParameterDerivatives& de, const char* what);
void require_constrained(const GaugeCoefficients& a, const char* what);
void require_constrained(const GaugeDerivatives& da, const char* what);
void require_constrained(const FieldStrengthCoefficients& f, const char* what);

// --- operations ------------------------------------------------------------

/// Splits a D x D matrix into antisymmetric + traceless symmetric + trace.
SymAntisymParts decompose_sym_antisym(const Tensor& t);

/// Field strength coefficients from gauge coefficients and their spacetime
/// derivatives,
///   F_munu = d_mu A_nu - d_nu A_mu + (A_mu . grad) A_nu - (A_nu . grad) A_mu,
/// expanded to order X^2 with O(X^3) discarded.
FieldStrengthCoefficients field_strength_from_gauge(const GaugeCoefficients& a,
                                                    const GaugeDerivatives& da);

/// Gauge variation of the gauge coefficients,
///   delta A_mu = d_mu E + (A_mu . grad) E - (E . grad) A_mu,
/// expanded to order X^2.
GaugeCoefficients gauge_vary_gauge(const GaugeCoefficients& a,
                                   const GaugeParameterCoefficients& eps,
                                   const GaugeParameterDerivatives& deps);

/// Homogeneous gauge variation of the field strength coefficients,
///   delta F_munu = (F_munu . grad) E - (E . grad) F_munu,
/// expanded to order X^2.
FieldStrengthCoefficients gauge_vary_field_strength(const FieldStrengthCoefficients& f,
                                                    const GaugeParameterCoefficients& eps);

/// Inner-space moments over the centered cube of edge l_P.
MomentTensors cube_moments(int D, double l_P);

/// Effective Lagrangian density after integrating the squared field strength
/// over the inner cube:
///
///   L = -(1/4 g2) (c^4 / G) [ f0.f0 + (l_P^2/12) f1.f1 + (l_P^2/6) f0.f2tr ]
///
/// where the dot is the spacetime contraction with both indices raised by eta
/// and f2tr is the (R,R) inner trace of f2.  Units: J / m^3.
double effective_lagrangian(const FieldStrengthCoefficients& f, double g2,
                            const PhysicalConstants& consts);

/// Human-readable summary of the closed-form second-order transformation and
/// composition rules implemented above.
std::string second_order_rules_text();

} // namespace isodyn
