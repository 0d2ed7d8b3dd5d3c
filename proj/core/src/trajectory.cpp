#include "isodyn/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "isodyn/errors.hpp"

namespace isodyn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

} // namespace

Trajectory Trajectory::at_rest(const Vec3& position) {
    Trajectory tr;
    tr.kind_ = Kind::Static;
    tr.base_ = position;
    tr.t_min_ = -kInf;
    tr.t_max_ = kInf;
    tr.max_speed_ = 0.0;
    return tr;
}

Trajectory Trajectory::uniform(const Vec3& position_at_t0, const Vec3& velocity,
                               const PhysicalConstants& consts, double t0) {
    const double v = norm(velocity);
    if (!(v < consts.c)) throw InvalidArgument("uniform trajectory must be subluminal");
    Trajectory tr;
    tr.kind_ = Kind::Uniform;
    tr.base_ = position_at_t0;
    tr.vel_ = velocity;
    tr.t0_ = t0;
    tr.t_min_ = -kInf;
    tr.t_max_ = kInf;
    tr.max_speed_ = v;
    return tr;
}

Trajectory Trajectory::circular(const Vec3& center, double radius, double omega,
                                const PhysicalConstants& consts, double phase) {
    if (!(radius > 0.0)) throw InvalidArgument("circular trajectory requires radius > 0");
    const double v = std::abs(omega) * radius;
    if (!(v < consts.c)) {
        throw InvalidArgument("circular trajectory is superluminal: |omega| r = " +
                              std::to_string(v) + " m/s");
    }
    Trajectory tr;
    tr.kind_ = Kind::Circular;
    tr.center_ = center;
    tr.radius_ = radius;
    tr.omega_ = omega;
    tr.phase_ = phase;
    tr.t_min_ = -kInf;
    tr.t_max_ = kInf;
    tr.max_speed_ = v;
    return tr;
}

Trajectory Trajectory::tabulated(std::vector<TrajectorySample> samples,
                                 const PhysicalConstants& consts) {
    if (samples.size() < 2) {
        throw InvalidArgument("tabulated trajectory needs at least two samples");
    }
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (!(samples[i].t > samples[i - 1].t)) {
            throw InvalidArgument("tabulated trajectory times must be strictly increasing");
        }
    }
    Trajectory tr;
    tr.kind_ = Kind::Tabulated;
    tr.samples_ = std::move(samples);
    tr.t_min_ = tr.samples_.front().t;
    tr.t_max_ = tr.samples_.back().t;

    // The Hermite interpolant can exceed the node speeds between nodes, so the
    // subluminal check also samples the interior of every segment.
    double vmax = 0.0;
    for (const TrajectorySample& s : tr.samples_) vmax = std::max(vmax, norm(s.velocity));
    for (std::size_t i = 0; i + 1 < tr.samples_.size(); ++i) {
        const double h = tr.samples_[i + 1].t - tr.samples_[i].t;
        for (int k = 1; k < 8; ++k) {
            const double t = tr.samples_[i].t + h * (static_cast<double>(k) / 8.0);
            vmax = std::max(vmax, norm(tr.velocity_tabulated(t)));
        }
    }
    if (!(vmax < consts.c)) {
        throw InvalidArgument("tabulated trajectory reaches |v| >= c between samples");
    }
    tr.max_speed_ = vmax;
    return tr;
}

void Trajectory::require_inside(double t) const {
    if (t < t_min_ || t > t_max_) {
        throw DomainExceeded("time " + std::to_string(t) + " outside trajectory domain [" +
                             std::to_string(t_min_) + ", " + std::to_string(t_max_) + "]");
    }
}

std::size_t Trajectory::segment(double t) const {
    auto it = std::upper_bound(samples_.begin(), samples_.end(), t,
                               [](double v, const TrajectorySample& s) { return v < s.t; });
    std::size_t i = static_cast<std::size_t>(it - samples_.begin());
    if (i > 0) --i;
    if (i + 1 >= samples_.size()) i = samples_.size() - 2;
    return i;
}

Vec3 Trajectory::position(double t) const {
    require_inside(t);
    switch (kind_) {
        case Kind::Static:
            return base_;
        case Kind::Uniform:
            return base_ + (t - t0_) * vel_;
        case Kind::Circular: {
            const double ph = omega_ * t + phase_;
            return center_ + Vec3{radius_ * std::cos(ph), radius_ * std::sin(ph), 0.0};
        }
        case Kind::Tabulated: {
            const std::size_t i = segment(t);
            const TrajectorySample& A = samples_[i];
            const TrajectorySample& B = samples_[i + 1];
            const double h = B.t - A.t;
            const double s = (t - A.t) / h;
            const double s2 = s * s;
            const double s3 = s2 * s;
            return (2.0 * s3 - 3.0 * s2 + 1.0) * A.position +
                   ((s3 - 2.0 * s2 + s) * h) * A.velocity +
                   (-2.0 * s3 + 3.0 * s2) * B.position + ((s3 - s2) * h) * B.velocity;
        }
    }
    return base_;
}

Vec3 Trajectory::velocity_tabulated(double t) const {
    const std::size_t i = segment(t);
    const TrajectorySample& A = samples_[i];
    const TrajectorySample& B = samples_[i + 1];
    const double h = B.t - A.t;
    const double s = (t - A.t) / h;
    const double s2 = s * s;
    return ((6.0 * s2 - 6.0 * s) / h) * A.position + (3.0 * s2 - 4.0 * s + 1.0) * A.velocity +
           ((-6.0 * s2 + 6.0 * s) / h) * B.position + (3.0 * s2 - 2.0 * s) * B.velocity;
}

Vec3 Trajectory::velocity(double t) const {
    require_inside(t);
    switch (kind_) {
        case Kind::Static:
            return {};
        case Kind::Uniform:
            return vel_;
        case Kind::Circular: {
            const double ph = omega_ * t + phase_;
            return {-radius_ * omega_ * std::sin(ph), radius_ * omega_ * std::cos(ph), 0.0};
        }
        case Kind::Tabulated:
            return velocity_tabulated(t);
    }
    return {};
}

Vec3 Trajectory::acceleration(double t) const {
    require_inside(t);
    switch (kind_) {
        case Kind::Static:
        case Kind::Uniform:
            return {};
        case Kind::Circular: {
            const double ph = omega_ * t + phase_;
            const double w2r = omega_ * omega_ * radius_;
            return {-w2r * std::cos(ph), -w2r * std::sin(ph), 0.0};
        }
        case Kind::Tabulated: {
            const std::size_t i = segment(t);
            const TrajectorySample& A = samples_[i];
            const TrajectorySample& B = samples_[i + 1];
            const double h = B.t - A.t;
            const double s = (t - A.t) / h;
            return ((12.0 * s - 6.0) / (h * h)) * A.position + ((6.0 * s - 4.0) / h) * A.velocity +
                   ((-12.0 * s + 6.0) / (h * h)) * B.position + ((6.0 * s - 2.0) / h) * B.velocity;
        }
    }
    return {};
}

} // namespace isodyn
