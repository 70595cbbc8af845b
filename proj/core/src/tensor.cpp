#include "cags/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace cags {

namespace {
ComputeMode g_mode = ComputeMode::verify;
}

ComputeMode compute_mode() { return g_mode; }
void set_compute_mode(ComputeMode mode) { g_mode = mode; }

Tensor::Tensor(std::vector<size_t> shape, double fill) : shape_(std::move(shape)) {
    size_t n = 1;
    for (size_t d : shape_) n *= d;
    data_.assign(n, fill);
}

Tensor Tensor::scalar(double v) {
    Tensor t({1});
    t.data_[0] = v;
    return t;
}

Tensor Tensor::matrix(size_t rows, size_t cols, std::initializer_list<double> vals) {
    Tensor t({rows, cols});
    if (vals.size() != rows * cols)
        throw ShapeError("matrix literal has " + std::to_string(vals.size()) + " values for shape " +
                         t.shape_str());
    std::copy(vals.begin(), vals.end(), t.data_.begin());
    return t;
}

Tensor Tensor::row(std::initializer_list<double> vals) {
    Tensor t({1, vals.size()});
    std::copy(vals.begin(), vals.end(), t.data_.begin());
    return t;
}

size_t Tensor::rows() const {
    if (shape_.size() != 2) throw ShapeError("rows() on non-matrix tensor " + shape_str());
    return shape_[0];
}

size_t Tensor::cols() const {
    if (shape_.size() != 2) throw ShapeError("cols() on non-matrix tensor " + shape_str());
    return shape_[1];
}

double& Tensor::operator()(size_t i, size_t j) { return data_[i * shape_[1] + j]; }
double Tensor::operator()(size_t i, size_t j) const { return data_[i * shape_[1] + j]; }

void Tensor::fill(double v) { std::fill(data_.begin(), data_.end(), v); }

bool Tensor::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

std::string Tensor::shape_str() const { return shape_to_string(shape_); }

std::string shape_to_string(const std::vector<size_t>& shape) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < shape.size(); ++i) {
        if (i) os << "x";
        os << shape[i];
    }
    os << "]";
    return os.str();
}

void check_finite(const Tensor& t, const char* where) {
    if (g_mode == ComputeMode::fast) return;
    if (!t.all_finite()) throw NumericError(std::string("non-finite value produced by ") + where);
}

namespace {
void require_same_shape(const Tensor& a, const Tensor& b, const char* op) {
    if (!a.same_shape(b))
        throw ShapeError(std::string(op) + ": shape mismatch " + a.shape_str() + " vs " + b.shape_str());
}
}  // namespace

Tensor add(const Tensor& a, const Tensor& b) {
    require_same_shape(a, b, "add");
    Tensor out = a;
    for (size_t i = 0; i < out.numel(); ++i) out[i] += b[i];
    check_finite(out, "add");
    return out;
}

Tensor sub(const Tensor& a, const Tensor& b) {
    require_same_shape(a, b, "sub");
    Tensor out = a;
    for (size_t i = 0; i < out.numel(); ++i) out[i] -= b[i];
    check_finite(out, "sub");
    return out;
}

Tensor mul(const Tensor& a, const Tensor& b) {
    require_same_shape(a, b, "mul");
    Tensor out = a;
    for (size_t i = 0; i < out.numel(); ++i) out[i] *= b[i];
    check_finite(out, "mul");
    return out;
}

Tensor scale(const Tensor& a, double s) {
    Tensor out = a;
    for (size_t i = 0; i < out.numel(); ++i) out[i] *= s;
    check_finite(out, "scale");
    return out;
}

Tensor relu(const Tensor& a) {
    Tensor out = a;
    for (size_t i = 0; i < out.numel(); ++i) out[i] = out[i] > 0.0 ? out[i] : 0.0;
    return out;
}

Tensor matmul(const Tensor& a, const Tensor& b) {
    if (a.rank() != 2 || b.rank() != 2 || a.cols() != b.rows())
        throw ShapeError("matmul: incompatible shapes " + a.shape_str() + " and " + b.shape_str());
    size_t m = a.rows(), k = a.cols(), n = b.cols();
    Tensor out({m, n});
    for (size_t i = 0; i < m; ++i) {
        for (size_t p = 0; p < k; ++p) {
            double av = a(i, p);
            if (av == 0.0) continue;
            const double* brow = b.data() + p * n;
            double* orow = out.data() + i * n;
            for (size_t j = 0; j < n; ++j) orow[j] += av * brow[j];
        }
    }
    check_finite(out, "matmul");
    return out;
}

Tensor transpose(const Tensor& a) {
    if (a.rank() != 2) throw ShapeError("transpose: rank-2 required, got " + a.shape_str());
    Tensor out({a.cols(), a.rows()});
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

Tensor softmax(const Tensor& a, int axis) {
    if (a.rank() != 2) throw ShapeError("softmax: rank-2 required, got " + a.shape_str());
    if (axis != 0 && axis != 1) throw ShapeError("softmax: axis must be 0 or 1");
    size_t slice_len = axis == 1 ? a.cols() : a.rows();
    if (slice_len == 0) throw ShapeError("softmax: empty axis in " + a.shape_str());
    Tensor out = a;
    size_t n_slices = axis == 1 ? a.rows() : a.cols();
    for (size_t s = 0; s < n_slices; ++s) {
        auto at = [&](size_t k) -> double& { return axis == 1 ? out(s, k) : out(k, s); };
        double mx = at(0);
        for (size_t k = 1; k < slice_len; ++k) mx = std::max(mx, at(k));
        double denom = 0.0;
        for (size_t k = 0; k < slice_len; ++k) {
            at(k) = std::exp(at(k) - mx);
            denom += at(k);
        }
        for (size_t k = 0; k < slice_len; ++k) at(k) /= denom;
    }
    check_finite(out, "softmax");
    return out;
}

Tensor concat_cols(const Tensor& a, const Tensor& b) {
    if (a.rank() != 2 || b.rank() != 2 || a.rows() != b.rows())
        throw ShapeError("concat_cols: incompatible shapes " + a.shape_str() + " and " + b.shape_str());
    Tensor out({a.rows(), a.cols() + b.cols()});
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

Tensor slice_cols(const Tensor& a, size_t c0, size_t c1) {
    if (a.rank() != 2 || c0 >= c1 || c1 > a.cols())
        throw ShapeError("slice_cols: invalid range [" + std::to_string(c0) + "," + std::to_string(c1) +
                         ") for " + a.shape_str());
    Tensor out({a.rows(), c1 - c0});
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = c0; j < c1; ++j) out(i, j - c0) = a(i, j);
    return out;
}

Tensor repeat_rows(const Tensor& row, size_t n) {
    if (row.rank() != 2 || row.rows() != 1)
        throw ShapeError("repeat_rows: expected 1xd row, got " + row.shape_str());
    Tensor out({n, row.cols()});
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < row.cols(); ++j) out(i, j) = row(0, j);
    return out;
}

Tensor sum_all(const Tensor& a) {
    double s = 0.0;
    for (size_t i = 0; i < a.numel(); ++i) s += a[i];
    Tensor out = Tensor::scalar(s);
    check_finite(out, "sum_all");
    return out;
}

}  // namespace cags
