#pragma once

#include <cmath>
#include <cstdint>

#include "pathgcn/dense_matrix.hpp"

namespace pathgcn {

struct AdamConfig {
    double lr = 0.01;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

template <typename T>
struct AdamState {
    DenseMatrix<T> m;  // first moment, shaped like the weight matrix
    DenseMatrix<T> v;  // second moment
    std::uint64_t t = 0;
    AdamConfig cfg;

    AdamState() = default;
    AdamState(std::size_t rows, std::size_t cols, AdamConfig c = {})
        : m(rows, cols), v(rows, cols), cfg(c) {}
};

// Standard Adam with bias correction; mutates w and state in place. Callers
// must not run concurrent steps on the same state.
template <typename T>
void adam_step(DenseMatrix<T>& w, const DenseMatrix<T>& grad, AdamState<T>& state) {
    if (!w.same_shape(grad) || !w.same_shape(state.m))
        throw ShapeError("adam_step: weight/gradient/state shapes differ");
    for (const T g : grad.data)
        if (!std::isfinite(static_cast<double>(g)))
            throw NumericError("adam_step: non-finite gradient entry");

    state.t += 1;
    const T b1 = static_cast<T>(state.cfg.beta1);
    const T b2 = static_cast<T>(state.cfg.beta2);
    const T lr = static_cast<T>(state.cfg.lr);
    const T eps = static_cast<T>(state.cfg.eps);
    const T bc1 = T(1) - static_cast<T>(std::pow(state.cfg.beta1, static_cast<double>(state.t)));
    const T bc2 = T(1) - static_cast<T>(std::pow(state.cfg.beta2, static_cast<double>(state.t)));

    for (std::size_t i = 0; i < w.data.size(); ++i) {
        const T g = grad.data[i];
        state.m.data[i] = b1 * state.m.data[i] + (T(1) - b1) * g;
        state.v.data[i] = b2 * state.v.data[i] + (T(1) - b2) * g * g;
        const T m_hat = state.m.data[i] / bc1;
        const T v_hat = state.v.data[i] / bc2;
        w.data[i] -= lr * m_hat / (std::sqrt(v_hat) + eps);
    }
}

}  // namespace pathgcn
