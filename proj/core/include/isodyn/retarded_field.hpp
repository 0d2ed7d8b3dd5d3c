#pragma once

#include <vector>

#include "isodyn/constants.hpp"
#include "isodyn/four_vector.hpp"
#include "isodyn/inner_vector.hpp"
#include "isodyn/tensor.hpp"
#include "isodyn/trajectory.hpp"
#include "isodyn/vec3.hpp"

namespace isodyn {

/// Solution of the retarded-point condition c (t - t_ret) = |x - y(t_ret)|.
struct RetardedGeometry {
    double t_ret = 0.0; ///< [s]
    Vec3 r_vec;         ///< x - y(t_ret) [m]
    double r = 0.0;     ///< |r_vec| [m]
    Vec3 v_hat;         ///< v(t_ret)/c, dimensionless
    Vec3 a_hat;         ///< dv_hat/dt at t_ret [1/s]
};

/// Relative convergence tolerance and iteration cap of the retarded solver.
inline constexpr double kRetardedTol = 1e-13;
inline constexpr int kRetardedMaxIter = 200;
/// Field points closer than this to the worldline are rejected [m].
inline constexpr double kWorldlineCutoff = 1e-9;

/// Unique retarded point on a subluminal worldline for the observation event
/// x = (c t, x_s).  Safeguarded Newton iteration inside a guaranteed bracket.
/// Throws OnWorldline within kWorldlineCutoff of the source, DomainExceeded if
/// the root leaves the trajectory domain, NoConvergence past the iteration cap.
RetardedGeometry retarded_time(const Trajectory& traj, const FourVector& x,
                               const PhysicalConstants& consts);

/// Retarded gauge potentials of a point charge K.  a0 is the dimensionless
/// time component per inner index M; a_spatial[M] is the spatial part.
struct Potentials {
    std::vector<double> a0;
    std::vector<Vec3> a_spatial;
    int D = 0;
};

/// Lienard-Wiechert potentials
///   a^mu_M = (g2/4pi) (G/c^3) K_M (1, v_hat) / (r - r_vec . v_hat)
/// evaluated at the retarded point.  The denominator is rejected below
/// 1e-15 r (NumericFailure).
Potentials lw_potential(const InnerVector& k, const Trajectory& traj, const FourVector& x,
                        double g2_over_4pi, const PhysicalConstants& consts);

/// Field components per inner index M: e[M] is the mixed time-space strength
/// f^{i0}_M [1/m], b[M] the purely spatial strength via b^i = -(1/2) eps^{ijk} f_{jk}.
struct FieldSample {
    std::vector<Vec3> e;
    std::vector<Vec3> b;
    FourVector position;
    int D = 0;
};

/// Closed-form retarded field of a point charge: near (velocity) plus wave
/// (acceleration) parts,
///   e_M = -(g2/4pi)(G/c^3) K_M [ u (1 - v_hat^2) + r_vec x (u x a_hat/c) ] / kappa^3,
///   b_M = r_hat x e_M,      u = r_vec - r v_hat,  kappa = r - r_vec . v_hat.
FieldSample field_components(const InnerVector& k, const Trajectory& traj, const FourVector& x,
                             double g2_over_4pi, const PhysicalConstants& consts);

/// Antisymmetric strength tensor f^{munu}_M (both spacetime indices upper).
struct FieldTensor {
    Tensor f; ///< [mu][nu][M]
    int D = 0;

    static FieldTensor zeros(int D);
};

FieldTensor field_tensor(const FieldSample& sample);

/// Options for the centered finite-difference residual checks below.
struct ResidualOptions {
    double rel_step = 1e-3;   ///< stencil step relative to the local scales
    double time_scale = 0.0;  ///< override for the temporal variation scale [s]; 0 = auto
};

/// Normalized Lorentz-gauge residual |d_mu a^mu_M| at x, five-point stencils.
/// The residual is scaled by max|a|/r; returns 0 when the potential vanishes.
double check_lorentz_gauge(const InnerVector& k, const Trajectory& traj, const FourVector& x,
                           double g2_over_4pi, const PhysicalConstants& consts,
                           const ResidualOptions& opt = {});

/// Normalized vacuum wave-equation residual |box a^nu_M| at x (box = -d0^2 + lap),
/// scaled by max|a|/r^2.
double check_wave_equation(const InnerVector& k, const Trajectory& traj, const FourVector& x,
                           double g2_over_4pi, const PhysicalConstants& consts,
                           const ResidualOptions& opt = {});

} // namespace isodyn
