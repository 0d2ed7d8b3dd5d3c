#pragma once

#include <functional>
#include <vector>

#include "isodyn/vec3.hpp"

namespace isodyn {

struct GaussLegendreRule {
    std::vector<double> nodes;   ///< on [-1, 1], ascending
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree 2n-1.
/// Nodes are found by Newton iteration on the Legendre polynomial.
GaussLegendreRule gauss_legendre(int n);

/// Integral of f over the unit sphere directions, d(cos theta) by Gauss-Legendre
/// of order theta_order and phi by the (spectrally accurate) trapezoid rule with
/// phi_order points.
double integrate_sphere(const std::function<double(const Vec3&)>& f,
                        int theta_order, int phi_order);

} // namespace isodyn
