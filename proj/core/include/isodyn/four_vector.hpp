#pragma once

#include <array>

#include "isodyn/vec3.hpp"

namespace isodyn {

/// Spacetime vector with contravariant components (x^0 = c t, x^1, x^2, x^3).
/// Metric signature is diag(-1, +1, +1, +1).
struct FourVector {
    std::array<double, 4> c{};

    constexpr FourVector() = default;
    constexpr FourVector(double x0, double x1, double x2, double x3) : c{x0, x1, x2, x3} {}
    FourVector(double x0, const Vec3& s) : c{x0, s.x, s.y, s.z} {}

    constexpr double operator[](int mu) const { return c[static_cast<std::size_t>(mu)]; }
    constexpr double& operator[](int mu) { return c[static_cast<std::size_t>(mu)]; }

    constexpr Vec3 spatial() const { return {c[1], c[2], c[3]}; }

    constexpr FourVector& operator+=(const FourVector& o) {
        for (int mu = 0; mu < 4; ++mu) c[static_cast<std::size_t>(mu)] += o[mu];
        return *this;
    }
    constexpr FourVector& operator-=(const FourVector& o) {
        for (int mu = 0; mu < 4; ++mu) c[static_cast<std::size_t>(mu)] -= o[mu];
        return *this;
    }
    constexpr FourVector& operator*=(double s) {
        for (double& v : c) v *= s;
        return *this;
    }
};

constexpr FourVector operator+(FourVector a, const FourVector& b) { return a += b; }
constexpr FourVector operator-(FourVector a, const FourVector& b) { return a -= b; }
constexpr FourVector operator*(double s, FourVector a) { return a *= s; }
constexpr FourVector operator*(FourVector a, double s) { return a *= s; }

/// Diagonal entry of the spacetime metric, eta_00 = -1, eta_ii = +1.
constexpr double metric_sign(int mu) { return mu == 0 ? -1.0 : 1.0; }

/// u_mu v^mu = -u^0 v^0 + u^1 v^1 + u^2 v^2 + u^3 v^3.
constexpr double minkowski_dot(const FourVector& u, const FourVector& v) {
    return -u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

} // namespace isodyn
