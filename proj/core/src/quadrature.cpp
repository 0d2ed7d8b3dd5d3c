#include "isodyn/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "isodyn/errors.hpp"

namespace isodyn {

GaussLegendreRule gauss_legendre(int n) {
    if (n < 1) throw InvalidArgument("gauss_legendre order must be >= 1");
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));

    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-like initial guess for the i-th root (descending order).
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Evaluate P_n(x) and P_n'(x) by the three-term recurrence.
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const std::size_t lo = static_cast<std::size_t>(i);
        const std::size_t hi = static_cast<std::size_t>(n - 1 - i);
        rule.nodes[lo] = -x;
        rule.nodes[hi] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[lo] = w;
        rule.weights[hi] = w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

double integrate_sphere(const std::function<double(const Vec3&)>& f,
                        int theta_order, int phi_order) {
    if (phi_order < 1) throw InvalidArgument("integrate_sphere requires phi_order >= 1");
    const GaussLegendreRule rule = gauss_legendre(theta_order);
    const double dphi = 2.0 * std::numbers::pi / phi_order;
    double total = 0.0;
    for (int i = 0; i < theta_order; ++i) {
        const double ct = rule.nodes[static_cast<std::size_t>(i)];
        const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        double ring = 0.0;
        for (int j = 0; j < phi_order; ++j) {
            const double phi = dphi * j;
            const Vec3 n{st * std::cos(phi), st * std::sin(phi), ct};
            ring += f(n);
        }
        total += rule.weights[static_cast<std::size_t>(i)] * ring * dphi;
    }
    return total;
}

} // namespace isodyn
