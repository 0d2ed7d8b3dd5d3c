#include "isodyn/particle.hpp"

#include <cmath>
#include <utility>

#include "isodyn/errors.hpp"

namespace isodyn {

ChargedParticle::ChargedParticle(double mass, InnerVector charge, InnerVector charge_over_mass,
                                 bool mass_locked, std::string label)
    : mass_(mass),
      charge_(std::move(charge)),
      charge_over_mass_(std::move(charge_over_mass)),
      mass_locked_(mass_locked),
      label_(std::move(label)) {}

ChargedParticle ChargedParticle::mass_locked(double mass, const InnerVector& direction,
                                             const PhysicalConstants& consts,
                                             std::string label) {
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw InvalidArgument("particle mass must be positive and finite");
    }
    const double n = direction.norm();
    if (n == 0.0) throw InvalidArgument("mass-locked charge direction must be nonzero");
    InnerVector khat = direction * (1.0 / n);
    InnerVector qom = khat * consts.c;        // K/m = c khat, mass never enters
    InnerVector charge = qom * mass;
    return ChargedParticle(mass, std::move(charge), std::move(qom), true, std::move(label));
}

ChargedParticle ChargedParticle::with_charge(double mass, const InnerVector& charge,
                                             std::string label) {
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw InvalidArgument("particle mass must be positive and finite");
    }
    InnerVector qom = charge * (1.0 / mass);
    return ChargedParticle(mass, charge, std::move(qom), false, std::move(label));
}

double ChargedParticle::mass_lock_residual(const PhysicalConstants& consts) const {
    const double target = mass_ * consts.c;
    return std::abs(charge_.norm() - target) / target;
}

} // namespace isodyn
