#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "pathgcn/error.hpp"

namespace pathgcn {

// Row-major dense matrix. 64-bit precision is the default throughout the
// engine; float is available for the f32 mode.
template <typename T>
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<T> data;

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, T(0)) {}

    T& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const T& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    std::span<T> row(std::size_t r) { return {data.data() + r * cols, cols}; }
    std::span<const T> row(std::size_t r) const { return {data.data() + r * cols, cols}; }
    void zero() { std::fill(data.begin(), data.end(), T(0)); }

    bool same_shape(const DenseMatrix& o) const { return rows == o.rows && cols == o.cols; }
};

using MatrixD = DenseMatrix<double>;
using MatrixF = DenseMatrix<float>;

// All three products accumulate in ascending-k order per output element and
// canonicalize -0.0 to +0.0 on store, so results are reproducible bit for
// bit and exact-zero rows keep a single representation across code paths.

template <typename T>
DenseMatrix<T> gemm(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
    if (a.cols != b.rows) throw ShapeError("gemm: inner dimensions differ");
    DenseMatrix<T> out(a.rows, b.cols);
    const std::size_t n = a.rows, k_dim = a.cols, m = b.cols;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        const T* arow = a.data.data() + i * k_dim;
        T* orow = out.data.data() + i * m;
        for (std::size_t k = 0; k < k_dim; ++k) {
            const T aik = arow[k];
            const T* brow = b.data.data() + k * m;
            for (std::size_t j = 0; j < m; ++j) orow[j] += aik * brow[j];
        }
        for (std::size_t j = 0; j < m; ++j) orow[j] += T(0);
    }
    return out;
}

// transpose(a) * b without materializing the transpose; a.rows == b.rows.
template <typename T>
DenseMatrix<T> gemm_at_b(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
    if (a.rows != b.rows) throw ShapeError("gemm_at_b: row counts differ");
    DenseMatrix<T> out(a.cols, b.cols);
    const std::size_t n = a.rows, r = a.cols, c = b.cols;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(r); ++i) {
        T* orow = out.data.data() + i * c;
        for (std::size_t k = 0; k < n; ++k) {
            const T aki = a.data[k * r + i];
            const T* brow = b.data.data() + k * c;
            for (std::size_t j = 0; j < c; ++j) orow[j] += aki * brow[j];
        }
        for (std::size_t j = 0; j < c; ++j) orow[j] += T(0);
    }
    return out;
}

// a * transpose(b); a.cols == b.cols.
template <typename T>
DenseMatrix<T> gemm_a_bt(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
    if (a.cols != b.cols) throw ShapeError("gemm_a_bt: column counts differ");
    DenseMatrix<T> out(a.rows, b.rows);
    const std::size_t n = a.rows, k_dim = a.cols, m = b.rows;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        const T* arow = a.data.data() + i * k_dim;
        T* orow = out.data.data() + i * m;
        for (std::size_t j = 0; j < m; ++j) {
            const T* brow = b.data.data() + j * k_dim;
            T acc = T(0);
            for (std::size_t k = 0; k < k_dim; ++k) acc += arow[k] * brow[k];
            orow[j] = acc + T(0);
        }
    }
    return out;
}

template <typename T>
DenseMatrix<T> transpose(const DenseMatrix<T>& a) {
    DenseMatrix<T> out(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) out.at(j, i) = a.at(i, j);
    return out;
}

template <typename T>
DenseMatrix<T> relu(const DenseMatrix<T>& x) {
    DenseMatrix<T> out(x.rows, x.cols);
    for (std::size_t i = 0; i < x.data.size(); ++i)
        out.data[i] = x.data[i] > T(0) ? x.data[i] : T(0);
    return out;
}

// Passes grad where pre_activation > 0; the derivative at exactly 0 is 0.
template <typename T>
DenseMatrix<T> relu_backward(const DenseMatrix<T>& grad, const DenseMatrix<T>& pre_activation) {
    if (!grad.same_shape(pre_activation)) throw ShapeError("relu_backward: shape mismatch");
    DenseMatrix<T> out(grad.rows, grad.cols);
    for (std::size_t i = 0; i < grad.data.size(); ++i)
        out.data[i] = pre_activation.data[i] > T(0) ? grad.data[i] : T(0);
    return out;
}

// Per-row softmax with max subtraction.
template <typename T>
DenseMatrix<T> row_softmax(const DenseMatrix<T>& x) {
    if (x.cols == 0) throw ShapeError("row_softmax: zero columns");
    DenseMatrix<T> out(x.rows, x.cols);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(x.rows); ++i) {
        const T* in = x.data.data() + i * x.cols;
        T* o = out.data.data() + i * x.cols;
        T mx = in[0];
        for (std::size_t j = 1; j < x.cols; ++j) mx = std::max(mx, in[j]);
        T sum = T(0);
        for (std::size_t j = 0; j < x.cols; ++j) {
            o[j] = std::exp(in[j] - mx);
            sum += o[j];
        }
        for (std::size_t j = 0; j < x.cols; ++j) o[j] /= sum;
    }
    return out;
}

}  // namespace pathgcn
