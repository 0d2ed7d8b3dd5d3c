#pragma once

#include <vector>

#include "isodyn/constants.hpp"
#include "isodyn/vec3.hpp"

namespace isodyn {

struct TrajectorySample {
    double t = 0.0;
    Vec3 position;
    Vec3 velocity;
};

/// Source worldline y(t) in coordinate time.  All kinds are subluminal on
/// their whole domain; factories reject anything reaching |v| >= c.
class Trajectory {
public:
    enum class Kind { Static, Uniform, Circular, Tabulated };

    static Trajectory at_rest(const Vec3& position);
    static Trajectory uniform(const Vec3& position_at_t0, const Vec3& velocity,
                              const PhysicalConstants& consts, double t0 = 0.0);
    /// Circle of the given radius in the x-y plane around center:
    /// y(t) = center + radius (cos(omega t + phase), sin(omega t + phase), 0).
    static Trajectory circular(const Vec3& center, double radius, double omega,
                               const PhysicalConstants& consts, double phase = 0.0);
    /// Piecewise cubic Hermite interpolation of the samples; velocity and
    /// acceleration are the analytic first and second derivatives.
    static Trajectory tabulated(std::vector<TrajectorySample> samples,
                                const PhysicalConstants& consts);

    Kind kind() const { return kind_; }

    Vec3 position(double t) const;
    Vec3 velocity(double t) const;
    Vec3 acceleration(double t) const;

    double t_min() const { return t_min_; }
    double t_max() const { return t_max_; }
    bool contains(double t) const { return t >= t_min_ && t <= t_max_; }

    /// Upper bound on |v| over the domain [m/s]; strictly below c.
    double max_speed() const { return max_speed_; }

    /// Angular velocity for the circular kind; 0 otherwise.
    double omega() const { return omega_; }
    double radius() const { return radius_; }
    Vec3 center() const { return center_; }
    double phase() const { return phase_; }

    /// Interpolation nodes for the tabulated kind; empty otherwise.
    const std::vector<TrajectorySample>& samples() const { return samples_; }

private:
    Trajectory() = default;

    void require_inside(double t) const;
    std::size_t segment(double t) const;
    Vec3 velocity_tabulated(double t) const;

    Kind kind_ = Kind::Static;
    double t_min_ = 0.0;
    double t_max_ = 0.0;
    double max_speed_ = 0.0;

    // static / uniform
    Vec3 base_;
    Vec3 vel_;
    double t0_ = 0.0;

    // circular
    Vec3 center_;
    double radius_ = 0.0;
    double omega_ = 0.0;
    double phase_ = 0.0;

    // tabulated
    std::vector<TrajectorySample> samples_;
};

} // namespace isodyn
