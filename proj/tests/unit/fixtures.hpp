#pragma once

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "pathgcn/csr_graph.hpp"
#include "pathgcn/dense_matrix.hpp"
#include "pathgcn/rmat.hpp"
#include "pathgcn/training_set.hpp"

namespace fixtures {

using namespace pathgcn;

// The canonical 5-vertex test graph used throughout: vertices v1..v5 are
// mapped to ids 0..4. Degrees are (1, 4, 2, 3, 2), so 6 undirected edges.
inline CsrGraph gex(WeightMode mode = WeightMode::Unit) {
    EdgeList el;
    el.pairs = {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}};
    CsrGraph g = build_undirected_csr(el);
    assign_edge_weights(g, mode);
    return g;
}

// Training set {v3, v5} of the worked example.
inline TrainingSet gex_training_set() {
    TrainingSet vt;
    vt.vertices = {2, 4};
    vt.ratio = 0.4;
    return vt;
}

// Star with one hub of the given degree.
inline CsrGraph star(VertexId leaves) {
    EdgeList el;
    for (VertexId i = 1; i <= leaves; ++i) el.pairs.emplace_back(0, i);
    CsrGraph g = build_undirected_csr(el);
    assign_edge_weights(g, WeightMode::Unit);
    return g;
}

inline CsrGraph rmat_graph(VertexId n, std::uint64_t m, std::uint64_t seed,
                           WeightMode mode = WeightMode::Unit) {
    RmatParams p;
    p.n = n;
    p.m = m;
    p.a = 0.45;
    p.b = 0.22;
    p.c = 0.22;
    p.d = 0.11;
    p.seed = seed;
    CsrGraph g = build_undirected_csr(gen_rmat(p));
    assign_edge_weights(g, mode);
    return g;
}

// Uniform random graph over n vertices with roughly m undirected edges.
inline CsrGraph random_graph(VertexId n, std::size_t m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<VertexId> pick(0, n - 1);
    EdgeList el;
    el.n_hint = n;
    for (std::size_t i = 0; i < m; ++i) {
        const VertexId u = pick(rng), v = pick(rng);
        if (u != v) el.pairs.emplace_back(u, v);
    }
    if (el.pairs.empty()) el.pairs.emplace_back(0, n - 1);
    CsrGraph g = build_undirected_csr(el);
    assign_edge_weights(g, WeightMode::Unit);
    return g;
}

template <typename T>
bool bitwise_equal(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
    if (!a.same_shape(b)) return false;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        if (std::memcmp(&a.data[i], &b.data[i], sizeof(T)) != 0) return false;
    }
    return true;
}

template <typename T>
double max_rel_diff(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        const double x = static_cast<double>(a.data[i]);
        const double y = static_cast<double>(b.data[i]);
        const double scale = std::max({1.0, std::abs(x), std::abs(y)});
        worst = std::max(worst, std::abs(x - y) / scale);
    }
    return worst;
}

template <typename T>
DenseMatrix<T> random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed,
                             double lo = -1.0, double hi = 1.0) {
    DenseMatrix<T> m(rows, cols);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(lo, hi);
    for (T& v : m.data) v = static_cast<T>(u(rng));
    return m;
}

}  // namespace fixtures
