#pragma once

#include <vector>

#include "isodyn/constants.hpp"
#include "isodyn/inner_vector.hpp"
#include "isodyn/retarded_field.hpp"
#include "isodyn/trajectory.hpp"
#include "isodyn/vec3.hpp"

namespace isodyn {

/// Retarded kinematics of a radiating point mass.
struct KinematicState {
    Vec3 v_hat; ///< v/c, |v_hat| < 1
    Vec3 a_hat; ///< d v_hat / d t_ret [1/s]
};

/// Circular orbit of a point mass.
struct OrbitConfig {
    double mass = 0.0;   ///< [kg]
    double radius = 0.0; ///< orbit radius rho [m]
    double v_hat = 0.0;  ///< orbital speed / c, in (0, 1)
};

/// Field energy density (1/8g2)(c^4/G) sum_M (e.e + b.b) [J/m^3].
double energy_density(const FieldSample& sample, double g2, const PhysicalConstants& consts);

/// Energy flux density c Theta^i_0 = (c^5/4g2 G) sum_M (e_M x b_M) [W/m^2].
///
/// Note: the closed flux relation used by flux_sphere_integral absorbs the
/// 1/(4g2) at unit coupling (g2/4pi = 1); integrating this vector over a
/// sphere therefore gives the radiated power divided by 16 pi.
Vec3 poynting(const FieldSample& sample, double g2, const PhysicalConstants& consts);

/// Radiated angular power toward the unit direction n [W/sr]:
///   dP/dOmega = (G/c^3) m^2 c^2 |n x ((n - v_hat) x a_hat)|^2 / (1 - n.v_hat)^5.
/// The retarded-time Jacobian dt/dt_ret is already absorbed in the fifth
/// power; do not re-apply it.
double angular_power(double m, const KinematicState& kin, const Vec3& n,
                     const PhysicalConstants& consts);

/// Total radiated power of the relativistic point mass [W]:
///   P = (8pi/3)(G/c^3) m^2 c^2 (|a_hat|^2 - |v_hat x a_hat|^2) / (1 - v_hat^2)^3.
double larmor_power(double m, const KinematicState& kin, const PhysicalConstants& consts);

/// Power radiated on a circular orbit [W]:
///   P = (8pi/3) G m^2 (c/rho^2) v_hat^4 / (1 - v_hat^2)^2.
double circular_orbit_power(const OrbitConfig& orbit, const PhysicalConstants& consts);

struct FluxResult {
    double power = 0.0;           ///< [W]
    int theta_order = 0;          ///< Gauss-Legendre order in cos(theta)
    int phi_order = 0;            ///< trapezoid nodes in phi
    double relative_change = 0.0; ///< last adaptive doubling change
};

/// Numeric radiated power through the sphere |x - center| = R at time t:
///   P = (c^5/G) * closed integral dS . sum_M (e_M x b_M)
/// (flux relation at unit coupling; fields evaluated with g2_over_4pi).
/// Gauss-Legendre in cos(theta) x trapezoid in phi, orders doubled until the
/// result changes by less than 1e-8 relative.
FluxResult flux_sphere_integral(const InnerVector& k, const Trajectory& traj, double t, double R,
                                double g2_over_4pi, const PhysicalConstants& consts,
                                int quadrature_order = 64, const Vec3& center = {});

struct DecaySample {
    double t = 0.0;      ///< [s]
    double rho = 0.0;    ///< separation [m]
    double energy = 0.0; ///< orbital energy -G m1 m2 / (2 rho) [J]
    double power = 0.0;  ///< radiated power at this separation [W]
};

/// Adiabatic inspiral of a circular binary under dE/dt = -P.
///
/// Convention (the underlying theory gives no two-body formula, so this is an
/// explicit extrapolation): orbit.radius is the separation rho; both bodies
/// circle the barycenter with Kepler angular velocity omega = sqrt(G M /
/// rho^3) and the total power is the one-body circular formula summed over
/// the two components.  orbit.v_hat is ignored in favor of the Kepler value.
/// power_scale multiplies the radiated power (0 freezes the orbit).
/// Throws NumericFailure when rho falls to contact_rho.
std::vector<DecaySample> binary_decay(const OrbitConfig& orbit, double companion_mass,
                                      double duration, double dt,
                                      const PhysicalConstants& consts,
                                      double power_scale = 1.0, double contact_rho = 0.0);

} // namespace isodyn
