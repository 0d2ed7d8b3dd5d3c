#pragma once

#include "isodyn/constants.hpp"
#include "isodyn/dynamics.hpp"
#include "isodyn/inner_vector.hpp"
#include "isodyn/retarded_field.hpp"

namespace isodyn {

/// Gauge-invariant interval along a trajectory step,
///   ds^2 = -(ydot.ydot + 2 a_mu^M (K_M/m) ydot^mu) dsigma^2,
/// split into the flat and the gauge-field contribution [m^2].
struct LineElementSample {
    double ds2 = 0.0;
    double dsigma = 0.0;
    double flat_part = 0.0;  ///< -(ydot.ydot) dsigma^2
    double gauge_part = 0.0; ///< -2 (a.ydot.K/m) dsigma^2
};

/// Line element for the state's four-velocity in the given potential
/// background.  charge_over_mass is K/m of the probe [m/s].
LineElementSample line_element(const ParticleState& state, const Potentials& a,
                               const InnerVector& charge_over_mass, double dsigma,
                               const PhysicalConstants& consts);

/// Clock-rate deficit 2 G m_src / (c^2 r) of a static mass-locked source.
double static_clock_deficit(double m_src, double r, const PhysicalConstants& consts);

/// Static clock rate sqrt(1 - 2 G m_src / (c^2 r)); a clock at radius r ticks
/// slower than one at infinity by this factor.  Throws InvalidArgument at or
/// inside the degenerate radius where the factor would be non-positive.
double static_clock_factor(double m_src, double r, const PhysicalConstants& consts);

} // namespace isodyn
