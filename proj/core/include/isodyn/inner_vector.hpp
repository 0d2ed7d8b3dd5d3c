#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace isodyn {

inline constexpr int kMinInnerDim = 1;
inline constexpr int kMaxInnerDim = 8;
inline constexpr int kDefaultInnerDim = 4;

/// Vector in the D-dimensional Euclidean inner space, 1 <= D <= 8.
/// The inner metric is delta_MN, so raised and lowered indices coincide.
class InnerVector {
public:
    /// Zero vector of dimension d.
    explicit InnerVector(int d = kDefaultInnerDim);
    InnerVector(int d, std::initializer_list<double> values);
    explicit InnerVector(const std::vector<double>& values);

    int dim() const { return dim_; }

    double operator[](int m) const { return comps_[static_cast<std::size_t>(m)]; }
    double& operator[](int m) { return comps_[static_cast<std::size_t>(m)]; }

    double norm() const;
    std::vector<double> components() const;

    /// Unit vector along e_axis.
    static InnerVector axis(int d, int axis);

    InnerVector& operator+=(const InnerVector& o);
    InnerVector& operator*=(double s);

private:
    std::array<double, kMaxInnerDim> comps_{};
    int dim_;
};

InnerVector operator+(InnerVector a, const InnerVector& b);
InnerVector operator*(double s, InnerVector a);
InnerVector operator*(InnerVector a, double s);

/// Euclidean dot product; throws InvalidArgument on dimension mismatch.
double inner_dot(const InnerVector& a, const InnerVector& b);

struct InnerAngle {
    double dot;       ///< K . Q
    double cos_theta; ///< K . Q / (|K| |Q|)
};

/// Dot product and alignment angle of two inner-space charges.
/// Throws InvalidArgument if either vector is zero or dimensions differ.
InnerAngle inner_angle_product(const InnerVector& k, const InnerVector& q);

} // namespace isodyn
