#include "isodyn/inner_vector.hpp"

#include <cmath>
#include <string>

#include "isodyn/errors.hpp"

namespace isodyn {

namespace {

void check_dim(int d) {
    if (d < kMinInnerDim || d > kMaxInnerDim) {
        throw InvalidArgument("inner dimension must be in [1, 8], got " + std::to_string(d));
    }
}

} // namespace

InnerVector::InnerVector(int d) : dim_(d) { check_dim(d); }

InnerVector::InnerVector(int d, std::initializer_list<double> values) : dim_(d) {
    check_dim(d);
    if (static_cast<int>(values.size()) != d) {
        throw InvalidArgument("expected " + std::to_string(d) + " components, got " +
                              std::to_string(values.size()));
    }
    int m = 0;
    for (double v : values) comps_[static_cast<std::size_t>(m++)] = v;
}

InnerVector::InnerVector(const std::vector<double>& values)
    : dim_(static_cast<int>(values.size())) {
    check_dim(dim_);
    for (int m = 0; m < dim_; ++m) comps_[static_cast<std::size_t>(m)] = values[static_cast<std::size_t>(m)];
}

double InnerVector::norm() const {
    double s = 0.0;
    for (int m = 0; m < dim_; ++m) s += (*this)[m] * (*this)[m];
    return std::sqrt(s);
}

std::vector<double> InnerVector::components() const {
    return std::vector<double>(comps_.begin(), comps_.begin() + dim_);
}

InnerVector InnerVector::axis(int d, int axis) {
    check_dim(d);
    if (axis < 0 || axis >= d) {
        throw InvalidArgument("axis index " + std::to_string(axis) + " out of range for D=" +
                              std::to_string(d));
    }
    InnerVector v(d);
    v[axis] = 1.0;
    return v;
}

InnerVector& InnerVector::operator+=(const InnerVector& o) {
    if (o.dim_ != dim_) throw InvalidArgument("inner dimension mismatch in addition");
    for (int m = 0; m < dim_; ++m) (*this)[m] += o[m];
    return *this;
}

InnerVector& InnerVector::operator*=(double s) {
    for (int m = 0; m < dim_; ++m) (*this)[m] *= s;
    return *this;
}

InnerVector operator+(InnerVector a, const InnerVector& b) { return a += b; }
InnerVector operator*(double s, InnerVector a) { return a *= s; }
InnerVector operator*(InnerVector a, double s) { return a *= s; }

double inner_dot(const InnerVector& a, const InnerVector& b) {
    if (a.dim() != b.dim()) {
        throw InvalidArgument("inner dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                              std::to_string(b.dim()));
    }
    double s = 0.0;
    for (int m = 0; m < a.dim(); ++m) s += a[m] * b[m];
    return s;
}

InnerAngle inner_angle_product(const InnerVector& k, const InnerVector& q) {
    const double d = inner_dot(k, q);
    const double nk = k.norm();
    const double nq = q.norm();
    if (nk == 0.0 || nq == 0.0) {
        throw InvalidArgument("inner_angle_product requires nonzero vectors");
    }
    return {d, d / (nk * nq)};
}

} // namespace isodyn
