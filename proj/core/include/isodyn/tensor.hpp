#pragma once

#include <cstddef>
#include <vector>

namespace isodyn {

/// Dense row-major tensor with runtime extents (rank <= 5).  Extents here are
/// tiny (4 spacetime, 6 index pairs, D <= 8 inner), so everything lives in one
/// flat vector.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<int> extents);

    int rank() const { return static_cast<int>(extents_.size()); }
    int extent(int axis) const { return extents_[static_cast<std::size_t>(axis)]; }
    std::size_t size() const { return data_.size(); }

    template <class... I>
    double operator()(I... i) const {
        return data_[offset(i...)];
    }
    template <class... I>
    double& operator()(I... i) {
        return data_[offset(i...)];
    }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    double max_abs() const;

    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    Tensor& operator*=(double s);

private:
    template <class... I>
    std::size_t offset(I... i) const {
        std::size_t off = 0;
        std::size_t axis = 0;
        ((off = off * static_cast<std::size_t>(extents_[axis++]) + static_cast<std::size_t>(i)),
         ...);
        return off;
    }

    std::vector<int> extents_;
    std::vector<double> data_;
};

Tensor operator+(Tensor a, const Tensor& b);
Tensor operator-(Tensor a, const Tensor& b);
Tensor operator*(double s, Tensor a);

} // namespace isodyn
