#include "isodyn/geometry.hpp"

#include <cmath>
#include <string>

#include "isodyn/errors.hpp"

namespace isodyn {

LineElementSample line_element(const ParticleState& state, const Potentials& a,
                               const InnerVector& charge_over_mass, double dsigma,
                               const PhysicalConstants& consts) {
    (void)consts;
    if (a.D != charge_over_mass.dim()) {
        throw InvalidArgument("line_element: potential / charge dimension mismatch");
    }
    const FourVector& u = state.velocity;

    // a_mu u^mu per inner index, then contracted with K/m.
    double coupling = 0.0;
    for (int m = 0; m < a.D; ++m) {
        const std::size_t mm = static_cast<std::size_t>(m);
        const double a_dot_u = -a.a0[mm] * u[0] + dot(a.a_spatial[mm], u.spatial());
        coupling += a_dot_u * charge_over_mass[m];
    }

    LineElementSample out;
    out.dsigma = dsigma;
    out.flat_part = -minkowski_dot(u, u) * dsigma * dsigma;
    out.gauge_part = -2.0 * coupling * dsigma * dsigma;
    out.ds2 = out.flat_part + out.gauge_part;
    return out;
}

double static_clock_deficit(double m_src, double r, const PhysicalConstants& consts) {
    if (m_src < 0.0) throw InvalidArgument("static_clock_deficit requires m_src >= 0");
    if (!(r > 0.0)) throw InvalidArgument("static_clock_deficit requires r > 0");
    return 2.0 * consts.G * m_src / (consts.c * consts.c * r);
}

double static_clock_factor(double m_src, double r, const PhysicalConstants& consts) {
    const double deficit = static_clock_deficit(m_src, r, consts);
    if (deficit >= 1.0) {
        throw InvalidArgument("radius " + std::to_string(r) +
                              " m is inside the degenerate radius 2 G m / c^2");
    }
    return std::sqrt(1.0 - deficit);
}

} // namespace isodyn
