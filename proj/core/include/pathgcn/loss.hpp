#pragma once

#include <cmath>
#include <cstdint>

#include "pathgcn/dense_matrix.hpp"
#include "pathgcn/training_set.hpp"

namespace pathgcn {

// Predicted probabilities this small are clamped before the log; occurrences
// are counted so callers can surface the numeric warning.
inline constexpr double kLogClamp = 1e-300;

// Cross-entropy over the training vertices only:
//   loss = -(1/|Vt|) * sum_{v in Vt} sum_j R[v,j] * log X[v,j]
template <typename T>
double ce_loss(const DenseMatrix<T>& xL, const DenseMatrix<T>& r, const TrainingSet& vt,
               std::uint64_t* clamp_count = nullptr) {
    if (!xL.same_shape(r)) throw ShapeError("ce_loss: prediction/reference shapes differ");
    const double inv = 1.0 / static_cast<double>(vt.size());
    double loss = 0.0;
    for (VertexId v : vt.vertices) {
        for (std::size_t j = 0; j < xL.cols; ++j) {
            const double rv = static_cast<double>(r.at(v, j));
            if (rv == 0.0) continue;
            double p = static_cast<double>(xL.at(v, j));
            if (p < kLogClamp) {
                p = kLogClamp;
                if (clamp_count) ++(*clamp_count);
            }
            loss -= inv * rv * std::log(p);
        }
    }
    return loss;
}

// The literal gradient of ce_loss with respect to the post-softmax outputs:
//   X'[v,j] = -R[v,j] / (|Vt| * X[v,j]) for v in Vt, exact zero rows elsewhere.
template <typename T>
DenseMatrix<T> output_grad_literal(const DenseMatrix<T>& xL, const DenseMatrix<T>& r,
                                   const TrainingSet& vt, std::uint64_t* clamp_count = nullptr) {
    if (!xL.same_shape(r)) throw ShapeError("output_grad_literal: shapes differ");
    DenseMatrix<T> grad(xL.rows, xL.cols);
    const double inv_vt = 1.0 / static_cast<double>(vt.size());
    for (VertexId v : vt.vertices) {
        for (std::size_t j = 0; j < xL.cols; ++j) {
            const double rv = static_cast<double>(r.at(v, j));
            if (rv == 0.0) continue;  // leaves the +0.0 fill, never -0.0
            double p = static_cast<double>(xL.at(v, j));
            if (p < kLogClamp) {
                p = kLogClamp;
                if (clamp_count) ++(*clamp_count);
            }
            grad.at(v, j) = static_cast<T>(-rv * inv_vt / p);
        }
    }
    return grad;
}

// Softmax + cross-entropy fused through the chain rule: returns the
// probabilities and the gradient with respect to the pre-softmax input,
//   grad_pre[v] = (probs[v] - R[v]) / |Vt| for v in Vt, exact zero rows else.
template <typename T>
struct SoftmaxCeGrad {
    DenseMatrix<T> probs;
    DenseMatrix<T> grad_pre;
};

template <typename T>
SoftmaxCeGrad<T> fused_softmax_ce_grad(const DenseMatrix<T>& pre_act, const DenseMatrix<T>& r,
                                       const TrainingSet& vt) {
    if (!pre_act.same_shape(r)) throw ShapeError("fused_softmax_ce_grad: shapes differ");
    SoftmaxCeGrad<T> out;
    out.probs = row_softmax(pre_act);
    out.grad_pre = DenseMatrix<T>(pre_act.rows, pre_act.cols);
    const T inv = T(1) / static_cast<T>(vt.size());
    for (VertexId v : vt.vertices)
        for (std::size_t j = 0; j < pre_act.cols; ++j)
            out.grad_pre.at(v, j) = (out.probs.at(v, j) - r.at(v, j)) * inv;
    return out;
}

}  // namespace pathgcn
