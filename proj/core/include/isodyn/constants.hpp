#pragma once

namespace isodyn {

/// Fundamental constants in SI units plus the Planck scales derived from them.
/// G doubles as the coupling-normalization scale of the field equations.
/// The defaults are the CODATA 2018 values; the m_P / l_P literals are the
/// exact doubles planck_derive produces for them, so a brace-initialized
/// instance equals codata_constants() bitwise.
struct PhysicalConstants {
    double c = 299792458.0;              ///< speed of light [m/s]
    double G = 6.67430e-11;              ///< gravitational constant [m^3 kg^-1 s^-2]
    double hbar = 1.054571817e-34;       ///< reduced Planck constant [J s]
    double m_P = 2.1764343420511269e-08; ///< Planck mass sqrt(hbar c / G) [kg]
    double l_P = 1.61625502392855e-35;   ///< Planck length sqrt(hbar G / c^3) [m]
};

/// Derives the Planck scales from (c, G, hbar).
/// Throws InvalidArgument unless all three inputs are positive and finite.
PhysicalConstants planck_derive(double c, double G, double hbar);

/// CODATA 2018 values: c = 299792458, G = 6.67430e-11, hbar = 1.054571817e-34.
PhysicalConstants codata_constants();

} // namespace isodyn
