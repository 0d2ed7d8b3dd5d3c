#include "isodyn/constants.hpp"

#include <cmath>

#include "isodyn/errors.hpp"

namespace isodyn {

PhysicalConstants planck_derive(double c, double G, double hbar) {
    const bool ok = std::isfinite(c) && c > 0.0 && std::isfinite(G) && G > 0.0 &&
                    std::isfinite(hbar) && hbar > 0.0;
    if (!ok) throw InvalidArgument("planck_derive requires positive finite c, G, hbar");
    PhysicalConstants k{};
    k.c = c;
    k.G = G;
    k.hbar = hbar;
    k.m_P = std::sqrt(hbar * c / G);
    k.l_P = std::sqrt(hbar * G / (c * c * c));
    return k;
}

PhysicalConstants codata_constants() {
    return planck_derive(299792458.0, 6.67430e-11, 1.054571817e-34);
}

} // namespace isodyn
