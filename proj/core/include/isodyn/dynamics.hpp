#pragma once

#include <functional>
#include <vector>

#include "isodyn/constants.hpp"
#include "isodyn/four_vector.hpp"
#include "isodyn/inner_vector.hpp"
#include "isodyn/particle.hpp"
#include "isodyn/retarded_field.hpp"

namespace isodyn {

/// Test-particle state in coordinate spacetime.
struct ParticleState {
    FourVector position;    ///< (c t, x) [m]
    FourVector velocity;    ///< four-velocity u^mu [m/s], u.u = -c^2
    double proper_time = 0; ///< accumulated tau [s]

    /// Builds a normalized state from coordinate position/velocity at time t.
    static ParticleState from_coordinate(const Vec3& position, const Vec3& velocity, double t,
                                         const PhysicalConstants& consts);

    double coordinate_time(const PhysicalConstants& consts) const;
    Vec3 coordinate_velocity(const PhysicalConstants& consts) const;
    double gamma(const PhysicalConstants& consts) const;
};

/// Covariant four-force F_mu = f_munu^M K_M u^nu [N]; spacetime indices of the
/// input tensor are upper and get lowered with eta here.
FourVector lorentz_like_force(const FieldTensor& f, const InnerVector& k, const FourVector& u);

/// Contravariant du^mu/dtau for charge-to-mass ratio K/m.  Computed without
/// ever dividing by the mass, so mass-locked particles of any mass get the
/// bitwise-identical acceleration.
FourVector lorentz_like_accel(const FieldTensor& f, const InnerVector& charge_over_mass,
                              const FourVector& u);

using FieldProvider = std::function<FieldTensor(const FourVector&)>;

struct MotionSample {
    ParticleState state;
    /// |u.u + c^2| / c^2 accumulated by the step before renormalization.
    double norm_drift = 0.0;
};

/// Allowed pre-renormalization norm drift per RK4 step; larger drift means the
/// proper-time step is too big for the field and the run aborts.
inline constexpr double kMaxNormDrift = 1e-6;

/// Fixed-step RK4 in proper time with four-velocity renormalization after
/// every step.  Returns the initial state plus every output_every-th step.
std::vector<MotionSample> integrate_motion(const ParticleState& initial,
                                           const ChargedParticle& particle,
                                           const FieldProvider& field, double dtau, int steps,
                                           const PhysicalConstants& consts,
                                           int output_every = 1);

/// Slow-motion acceleration of a mass-locked test particle at separation
/// r_vec from a static mass-locked source:
///   a = (g2/4pi) G m_src cos_theta r_hat / r^2
/// (cos_theta = -1, anti-parallel charges, gives Newtonian attraction).
Vec3 newton_accel(double m_src, const Vec3& r_vec, double cos_theta, double g2_over_4pi,
                  const PhysicalConstants& consts);

/// Static interaction energy (g2/4pi) G m1 m2 cos_theta / r [J].
double interaction_energy(double m1, double m2, double r, double cos_theta, double g2_over_4pi,
                          const PhysicalConstants& consts);

/// One level of the quantized mass spectrum m = pi m_P sqrt(n.n).
struct SpectrumEntry {
    std::vector<int> n;          ///< lexicographically smallest vector of the level
    double mass = 0.0;           ///< [kg]
    std::size_t multiplicity = 0; ///< number of lattice vectors sharing n.n
};

/// All levels reachable with components 0 <= n_M <= n_max (n = 0 excluded),
/// merged by n.n and sorted by ascending mass.
std::vector<SpectrumEntry> mass_spectrum(int D, int n_max, const PhysicalConstants& consts);

} // namespace isodyn
