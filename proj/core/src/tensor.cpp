#include "isodyn/tensor.hpp"

#include <cmath>
#include <utility>

#include "isodyn/errors.hpp"

namespace isodyn {

Tensor::Tensor(std::vector<int> extents) : extents_(std::move(extents)) {
    if (extents_.empty() || extents_.size() > 5) {
        throw InvalidArgument("Tensor rank must be between 1 and 5");
    }
    std::size_t n = 1;
    for (int e : extents_) {
        if (e < 1) throw InvalidArgument("Tensor extents must be positive");
        n *= static_cast<std::size_t>(e);
    }
    data_.assign(n, 0.0);
}

double Tensor::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

Tensor& Tensor::operator+=(const Tensor& o) {
    if (o.extents_ != extents_) throw InvalidArgument("Tensor shape mismatch in +=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
    if (o.extents_ != extents_) throw InvalidArgument("Tensor shape mismatch in -=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Tensor& Tensor::operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
}

Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
Tensor operator*(double s, Tensor a) { return a *= s; }

} // namespace isodyn
