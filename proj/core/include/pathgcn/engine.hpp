#pragma once

#include <chrono>
#include <cstdint>
#include <random>
#include <vector>

#include "pathgcn/aggregate.hpp"
#include "pathgcn/adam.hpp"
#include "pathgcn/execution_path.hpp"
#include "pathgcn/frontier.hpp"
#include "pathgcn/group_cost.hpp"
#include "pathgcn/grouping.hpp"
#include "pathgcn/loss.hpp"
#include "pathgcn/run_config.hpp"

namespace pathgcn {

template <typename T>
struct ModelParams {
    std::vector<DenseMatrix<T>> weights;  // W^(l), shapes chained f -> dims
    std::vector<AdamState<T>> adam;
    std::uint64_t init_seed = 0;
};

template <typename T>
struct EpochArtifacts {
    std::vector<DenseMatrix<T>> x;        // X^(0) .. X^(L)
    std::vector<DenseMatrix<T>> y;        // Y^(0) .. Y^(L-1)
    std::vector<DenseMatrix<T>> pre_act;  // Y^(l) * W^(l) before the activation
};

struct WorkCounters {
    StageCounters forward_aggregation;
    StageCounters forward_combination;
    StageCounters loss_grad;
    StageCounters backward_combination;
    StageCounters backward_aggregation;
    StageCounters parameter_update;
    StageCounters path_preparation;
    // edge traversals of one backward pass, layer L-1 first
    std::vector<std::uint64_t> backward_edges_per_layer;
};

class StageTimer {
public:
    StageTimer() : start_(std::chrono::steady_clock::now()) {}
    double stop() {
        const auto end = std::chrono::steady_clock::now();
        return std::chrono::duration<double>(end - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// ---- seeded initialization ------------------------------------------------

// Distinct deterministic streams derived from one user seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t h = seed ^ (0x9e3779b97f4a7c15ull + stream);
    h ^= h >> 30;
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 27;
    h *= 0x94d049bb133111ebull;
    h ^= h >> 31;
    return h;
}

template <typename T>
ModelParams<T> init_params(std::size_t f, const std::vector<std::size_t>& dims,
                           std::uint64_t seed, AdamConfig adam_cfg = {}) {
    ModelParams<T> p;
    p.init_seed = seed;
    std::mt19937_64 rng(derive_seed(seed, 1));
    std::size_t in_dim = f;
    for (std::size_t dim : dims) {
        DenseMatrix<T> w(in_dim, dim);
        const double bound = std::sqrt(6.0 / static_cast<double>(in_dim + dim));
        std::uniform_real_distribution<double> u(-bound, bound);
        for (T& x : w.data) x = static_cast<T>(u(rng));
        p.weights.push_back(std::move(w));
        p.adam.emplace_back(in_dim, dim, adam_cfg);
        in_dim = dim;
    }
    return p;
}

template <typename T>
DenseMatrix<T> random_features(VertexId n, std::size_t f, std::uint64_t seed) {
    DenseMatrix<T> x(n, f);
    std::mt19937_64 rng(derive_seed(seed, 2));
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (T& v : x.data) v = static_cast<T>(u(rng));
    return x;
}

// One-hot reference rows for the training vertices, uniformly random class;
// zero rows elsewhere.
template <typename T>
DenseMatrix<T> random_reference(VertexId n, std::size_t classes, const TrainingSet& vt,
                                std::uint64_t seed) {
    DenseMatrix<T> r(n, classes);
    std::mt19937_64 rng(derive_seed(seed, 3));
    std::uniform_int_distribution<std::size_t> cls(0, classes - 1);
    for (VertexId v : vt.vertices) r.at(v, cls(rng)) = T(1);
    return r;
}

// ---- forward --------------------------------------------------------------

// Per layer: pull-aggregate X^(l) into Y^(l), combine with W^(l), then ReLU
// (softmax at the last layer). All intermediates are retained for backward.
template <typename T>
EpochArtifacts<T> forward(const GroupedCsr& graph, const DenseMatrix<T>& x0,
                          const ModelParams<T>& params, CommitMode commit, int workers,
                          WorkCounters& counters, std::size_t col_chunk = 0) {
    const std::size_t L = params.weights.size();
    EpochArtifacts<T> arts;
    arts.x.push_back(x0);
    for (std::size_t l = 0; l < L; ++l) {
        if (arts.x[l].cols != params.weights[l].rows)
            throw ShapeError("forward: feature/weight shape mismatch at layer " +
                             std::to_string(l));
        DenseMatrix<T> y(graph.base.n, arts.x[l].cols);
        {
            StageTimer t;
            aggregate_pull(graph, arts.x[l], y, commit, workers,
                           &counters.forward_aggregation, col_chunk);
            counters.forward_aggregation.wall_seconds += t.stop();
        }
        StageTimer t;
        DenseMatrix<T> pre = gemm(y, params.weights[l]);
        arts.x.push_back(l + 1 < L ? relu(pre) : row_softmax(pre));
        counters.forward_combination.wall_seconds += t.stop();
        arts.y.push_back(std::move(y));
        arts.pre_act.push_back(std::move(pre));
    }
    return arts;
}

// Gradient with respect to the pre-softmax combination output, reusing the
// probabilities computed in forward: (probs - R)/|Vt| on training rows,
// exact zero rows elsewhere. Identical to fused_softmax_ce_grad on the same
// pre-activation.
template <typename T>
DenseMatrix<T> top_grad_from_probs(const DenseMatrix<T>& probs, const DenseMatrix<T>& r,
                                   const TrainingSet& vt) {
    DenseMatrix<T> grad(probs.rows, probs.cols);
    const T inv = T(1) / static_cast<T>(vt.size());
    for (VertexId v : vt.vertices)
        for (std::size_t j = 0; j < probs.cols; ++j)
            grad.at(v, j) = (probs.at(v, j) - r.at(v, j)) * inv;
    return grad;
}

// ---- backward variants ----------------------------------------------------

namespace detail {

template <typename T>
DenseMatrix<T> gather_rows(const DenseMatrix<T>& src, std::span<const VertexId> ids) {
    DenseMatrix<T> out(ids.size(), src.cols);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const T* in = src.data.data() + std::size_t{ids[i]} * src.cols;
        std::copy(in, in + src.cols, out.data.data() + i * src.cols);
    }
    return out;
}

}  // namespace detail

// Alg.-1-shaped backward: combinations and aggregations over the full graph
// for every layer. top_grad is the pre-activation gradient at layer L-1.
// x_grads_out, when given, captures X^(l)' per layer (index L-1 first) for
// the zero-row verification.
template <typename T>
std::vector<DenseMatrix<T>> backward_all_active(const GroupedCsr& graph,
                                                const EpochArtifacts<T>& arts,
                                                const DenseMatrix<T>& top_grad,
                                                const ModelParams<T>& params, CommitMode commit,
                                                int workers, WorkCounters& counters,
                                                std::vector<DenseMatrix<T>>* x_grads_out = nullptr,
                                                std::size_t col_chunk = 0) {
    const std::size_t L = params.weights.size();
    std::vector<DenseMatrix<T>> w_grads(L);
    counters.backward_edges_per_layer.assign(L, 0);
    DenseMatrix<T> g = top_grad;  // pre-activation gradient of layer l
    for (std::size_t l = L; l-- > 0;) {
        StageTimer tc;
        w_grads[l] = gemm_at_b(arts.y[l], g);
        DenseMatrix<T> y_grad = gemm_a_bt(g, params.weights[l]);
        counters.backward_combination.wall_seconds += tc.stop();

        DenseMatrix<T> x_grad(graph.base.n, y_grad.cols);
        {
            StageTimer ta;
            const std::uint64_t before = counters.backward_aggregation.edges_traversed;
            aggregate_pull(graph, y_grad, x_grad, commit, workers,
                           &counters.backward_aggregation, col_chunk);
            counters.backward_edges_per_layer[L - 1 - l] =
                counters.backward_aggregation.edges_traversed - before;
            counters.backward_aggregation.wall_seconds += ta.stop();
        }
        if (l > 0) {
            StageTimer tm;
            g = relu_backward(x_grad, arts.pre_act[l - 1]);
            counters.backward_combination.wall_seconds += tm.stop();
        }
        if (x_grads_out) x_grads_out->push_back(std::move(x_grad));
    }
    return w_grads;
}

// Full-graph traversal with activity tests: groups with an inactive
// destination and edges with an inactive source are skipped.
template <typename T>
std::vector<DenseMatrix<T>> backward_ifelse(const GroupedCsr& graph,
                                            const FrontierSets& frontiers,
                                            const EpochArtifacts<T>& arts,
                                            const DenseMatrix<T>& top_grad,
                                            const ModelParams<T>& params, CommitMode commit,
                                            int workers, WorkCounters& counters) {
    const std::size_t L = params.weights.size();
    if (frontiers.depth() != L)
        throw StalenessError("ifelse backward: frontiers were computed for a different depth");
    std::vector<DenseMatrix<T>> w_grads(L);
    counters.backward_edges_per_layer.assign(L, 0);
    const VertexId n = graph.base.n;

    DenseMatrix<T> g = top_grad;
    for (std::size_t l = L; l-- > 0;) {
        StageTimer tc;
        w_grads[l] = gemm_at_b(arts.y[l], g);
        DenseMatrix<T> y_grad = gemm_a_bt(g, params.weights[l]);
        counters.backward_combination.wall_seconds += tc.stop();

        const auto dest_active = level_bitmap(frontiers, L - l, n);
        const auto src_active = level_bitmap(frontiers, L - l - 1, n);
        DenseMatrix<T> x_grad(n, y_grad.cols);
        {
            StageTimer ta;
            const std::uint64_t before = counters.backward_aggregation.edges_traversed;
            aggregate_pull_filtered(graph, y_grad, x_grad, dest_active, src_active, commit,
                                    workers, &counters.backward_aggregation);
            counters.backward_edges_per_layer[L - 1 - l] =
                counters.backward_aggregation.edges_traversed - before;
            counters.backward_aggregation.wall_seconds += ta.stop();
        }
        if (l > 0) {
            StageTimer tm;
            g = relu_backward(x_grad, arts.pre_act[l - 1]);
            counters.backward_combination.wall_seconds += tm.stop();
        }
    }
    return w_grads;
}

template <typename T>
void aggregate_pull_path_global(const ExecutionPath& path, const GroupedCsr& grouped,
                                const DenseMatrix<T>& input_full, DenseMatrix<T>& output_full,
                                CommitMode commit, int workers, StageCounters* counters);

// Execution-path backward. Local gather mode keeps per-layer compact
// matrices whose rows follow the frontier arrays; global mode keeps
// full-width matrices and walks the path with global ids.
template <typename T>
std::vector<DenseMatrix<T>> backward_epp(const std::vector<ExecutionPath>& paths,
                                         const std::vector<GroupedCsr>& path_groups,
                                         const FrontierSets& frontiers,
                                         const EpochArtifacts<T>& arts,
                                         const DenseMatrix<T>& top_grad,
                                         const ModelParams<T>& params, GatherMode gather,
                                         CommitMode commit, int workers, WorkCounters& counters,
                                         std::uint64_t expected_fingerprint,
                                         std::size_t col_chunk = 0) {
    const std::size_t L = params.weights.size();
    if (paths.size() != L || frontiers.depth() != L)
        throw StalenessError("epp backward: paths were prepared for a different layer count");
    for (const ExecutionPath& p : paths)
        if (p.fingerprint != expected_fingerprint)
            throw StalenessError(
                "epp backward: execution paths are stale for this graph/training set");

    std::vector<DenseMatrix<T>> w_grads(L);
    counters.backward_edges_per_layer.assign(L, 0);

    if (gather == GatherMode::Global) {
        DenseMatrix<T> g = top_grad;
        for (std::size_t i = 0; i < L; ++i) {
            const std::size_t l = L - 1 - i;
            const ExecutionPath& path = paths[i];
            StageTimer tc;
            w_grads[l] = gemm_at_b(arts.y[l], g);
            DenseMatrix<T> y_grad = gemm_a_bt(g, params.weights[l]);
            counters.backward_combination.wall_seconds += tc.stop();

            DenseMatrix<T> x_grad(arts.y[l].rows, y_grad.cols);
            {
                StageTimer ta;
                aggregate_pull_path_global(path, path_groups[i], y_grad, x_grad, commit,
                                           workers, &counters.backward_aggregation);
                counters.backward_edges_per_layer[i] = path.edge_count();
                counters.backward_aggregation.wall_seconds += ta.stop();
            }
            if (l > 0) {
                StageTimer tm;
                g = relu_backward(x_grad, arts.pre_act[l - 1]);
                counters.backward_combination.wall_seconds += tm.stop();
            }
        }
        return w_grads;
    }

    // compact chain: the gradient rows entering layer l follow the frontier
    // N^{L-l-1}, the rows leaving follow N^{L-l}
    StageTimer tg;
    DenseMatrix<T> g = detail::gather_rows(top_grad, frontiers.levels[0]);
    counters.backward_combination.wall_seconds += tg.stop();
    for (std::size_t i = 0; i < L; ++i) {
        const std::size_t l = L - 1 - i;
        const ExecutionPath& path = paths[i];
        const std::vector<VertexId>& in_rows = frontiers.levels[L - l - 1];

        StageTimer tc;
        DenseMatrix<T> y_c = detail::gather_rows(arts.y[l], in_rows);
        w_grads[l] = gemm_at_b(y_c, g);
        DenseMatrix<T> y_grad = gemm_a_bt(g, params.weights[l]);
        counters.backward_combination.wall_seconds += tc.stop();

        DenseMatrix<T> x_grad(path.dest_count(), y_grad.cols);
        {
            StageTimer ta;
            DenseMatrix<T> y_used = detail::gather_rows(y_grad, path.src_pos_in_parent);
            aggregate_pull(path_groups[i], y_used, x_grad, commit, workers,
                           &counters.backward_aggregation, col_chunk);
            counters.backward_edges_per_layer[i] = path.edge_count();
            counters.backward_aggregation.wall_seconds += ta.stop();
        }
        if (l > 0) {
            StageTimer tm;
            DenseMatrix<T> pre_c =
                detail::gather_rows(arts.pre_act[l - 1], frontiers.levels[L - l]);
            g = relu_backward(x_grad, pre_c);
            counters.backward_combination.wall_seconds += tm.stop();
        }
    }
    return w_grads;
}

// Path aggregation in global-id space, for the gather ablation.
template <typename T>
void aggregate_pull_path_global(const ExecutionPath& path, const GroupedCsr& grouped,
                                const DenseMatrix<T>& input_full, DenseMatrix<T>& output_full,
                                CommitMode commit, int workers, StageCounters* counters) {
    if (output_full.cols != input_full.cols)
        throw ShapeError("aggregate_pull_path_global: dims differ");
    const std::size_t dim = input_full.cols;
    const int nthreads = resolve_workers(workers);
    std::uint64_t atomics = 0;

    if (commit == CommitMode::Deterministic) {
#pragma omp parallel for schedule(dynamic, 64) num_threads(nthreads)
        for (std::ptrdiff_t d = 0; d < static_cast<std::ptrdiff_t>(path.dest_count()); ++d) {
            T* out = output_full.data.data() +
                     std::size_t{path.dest_local_to_global[d]} * dim;
            for (EdgeIndex e = path.offsets[d]; e < path.offsets[d + 1]; ++e) {
                const T w = static_cast<T>(path.weights[e]);
                const VertexId u = path.src_local_to_global[path.neighbors[e]];
                const T* in = input_full.data.data() + std::size_t{u} * dim;
                for (std::size_t j = 0; j < dim; ++j) out[j] += w * in[j];
            }
            for (std::size_t j = 0; j < dim; ++j) out[j] += T(0);
        }
    } else {
#pragma omp parallel num_threads(nthreads) reduction(+ : atomics)
        {
            std::vector<T> scratch(dim, T(0));
#pragma omp for schedule(dynamic, 32)
            for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(grouped.groups.size());
                 ++i) {
                const auto& grp = grouped.groups[i];
                std::fill(scratch.begin(), scratch.end(), T(0));
                for (EdgeIndex e = grp.edge_begin; e < grp.edge_end; ++e) {
                    const T w = static_cast<T>(path.weights[e]);
                    const VertexId u = path.src_local_to_global[path.neighbors[e]];
                    const T* in = input_full.data.data() + std::size_t{u} * dim;
                    for (std::size_t j = 0; j < dim; ++j) scratch[j] += w * in[j];
                }
                T* out = output_full.data.data() +
                         std::size_t{path.dest_local_to_global[grp.dest]} * dim;
                if (grouped.groups_of(grp.dest) == 1) {
                    for (std::size_t j = 0; j < dim; ++j) out[j] += scratch[j];
                } else {
                    for (std::size_t j = 0; j < dim; ++j) {
#pragma omp atomic
                        out[j] += scratch[j];
                    }
                    atomics += dim;
                }
            }
        }
    }
    if (counters) {
        counters->edges_traversed += path.edge_count();
        counters->groups_executed += grouped.groups.size();
        counters->atomic_commits += atomics;
    }
}

}  // namespace pathgcn
