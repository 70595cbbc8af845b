#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "cags/common.hpp"

namespace cags {

// Dense row-major fp64 tensor. Scalars are shape {1}. No implicit
// broadcasting anywhere; widening is done by explicit repeat ops.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<size_t> shape, double fill = 0.0);

    static Tensor scalar(double v);
    static Tensor matrix(size_t rows, size_t cols, std::initializer_list<double> vals);
    static Tensor row(std::initializer_list<double> vals);

    const std::vector<size_t>& shape() const { return shape_; }
    size_t rank() const { return shape_.size(); }
    size_t numel() const { return data_.size(); }
    bool is_scalar() const { return data_.size() == 1; }

    size_t rows() const;
    size_t cols() const;

    double& operator()(size_t i, size_t j);
    double operator()(size_t i, size_t j) const;
    double& operator[](size_t i) { return data_[i]; }
    double operator[](size_t i) const { return data_[i]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    void fill(double v);
    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
    std::string shape_str() const;

    bool all_finite() const;

private:
    std::vector<size_t> shape_;
    std::vector<double> data_;
};

std::string shape_to_string(const std::vector<size_t>& shape);

// Throws NumericError in verify mode if t contains NaN/Inf.
void check_finite(const Tensor& t, const char* where);

// ---- elementwise / structural ops (shape-checked, throw ShapeError) ----
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double s);
Tensor relu(const Tensor& a);

Tensor matmul(const Tensor& a, const Tensor& b);
Tensor transpose(const Tensor& a);

// Numerically stabilized softmax along axis (0 or 1) of a rank-2 tensor.
Tensor softmax(const Tensor& a, int axis);

Tensor concat_cols(const Tensor& a, const Tensor& b);
Tensor slice_cols(const Tensor& a, size_t c0, size_t c1);
// Stacks `n` copies of a 1×d row.
Tensor repeat_rows(const Tensor& row, size_t n);
Tensor sum_all(const Tensor& a);  // -> shape {1}

}  // namespace cags
