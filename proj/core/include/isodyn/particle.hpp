#pragma once

#include <string>

#include "isodyn/constants.hpp"
#include "isodyn/inner_vector.hpp"

namespace isodyn {

/// Point source/test particle carrying an inner-space charge K [kg m/s].
///
/// A "mass-locked" particle has |K| = m c by construction; its charge-to-mass
/// ratio K/m = c khat is then independent of the mass, which is what makes
/// test-particle motion universal.
class ChargedParticle {
public:
    /// Particle with |K| = mass * c along the (normalized) direction.
    static ChargedParticle mass_locked(double mass, const InnerVector& direction,
                                       const PhysicalConstants& consts,
                                       std::string label = {});

    /// Particle with an explicit charge vector, not necessarily mass-locked.
    static ChargedParticle with_charge(double mass, const InnerVector& charge,
                                       std::string label = {});

    double mass() const { return mass_; }
    const InnerVector& charge() const { return charge_; }
    /// K/m; for mass-locked particles this is computed as c * khat directly,
    /// so it is bitwise identical across masses sharing a direction.
    const InnerVector& charge_over_mass() const { return charge_over_mass_; }
    bool is_mass_locked() const { return mass_locked_; }
    const std::string& label() const { return label_; }

    /// Relative deviation of |K| from m c (0 for mass-locked particles).
    double mass_lock_residual(const PhysicalConstants& consts) const;

private:
    ChargedParticle(double mass, InnerVector charge, InnerVector charge_over_mass,
                    bool mass_locked, std::string label);

    double mass_;
    InnerVector charge_;
    InnerVector charge_over_mass_;
    bool mass_locked_;
    std::string label_;
};

} // namespace isodyn
