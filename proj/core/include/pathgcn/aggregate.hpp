#pragma once

#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pathgcn/dense_matrix.hpp"
#include "pathgcn/grouping.hpp"

namespace pathgcn {

// Deterministic: every destination row is accumulated serially in ascending
// edge order, parallelized across destinations. The result is bit-identical
// for any worker count and any group size, which is what the cross-mode
// gradient-equality contract needs. Fast: groups run in parallel and commit
// partial rows with elementwise atomic adds, mirroring GPU-style grouped
// scheduling; results are order-dependent within floating-point tolerance.
enum class CommitMode { Deterministic, Fast };

struct StageCounters {
    std::uint64_t edges_traversed = 0;
    std::uint64_t groups_executed = 0;
    std::uint64_t atomic_commits = 0;
    std::uint64_t edges_skipped = 0;
    std::uint64_t groups_skipped = 0;
    double wall_seconds = 0.0;

    void add_work(const StageCounters& o) {
        edges_traversed += o.edges_traversed;
        groups_executed += o.groups_executed;
        atomic_commits += o.atomic_commits;
        edges_skipped += o.edges_skipped;
        groups_skipped += o.groups_skipped;
        wall_seconds += o.wall_seconds;
    }
};

inline int resolve_workers(int requested) {
#ifdef _OPENMP
    return requested > 0 ? requested : omp_get_max_threads();
#else
    (void)requested;
    return 1;
#endif
}

// output[v] = sum over v's grouped neighbor range of weight(e) * input[neighbors[e]].
// output must be zeroed and shaped (dest count) x dim; input rows are indexed
// by the grouping's source ids (global ids for a graph grouping, local ids
// for an execution-path grouping). col_chunk splits each task's feature
// range into chunks of that many columns (0 = whole row); it only changes
// scheduling, never values, since per-column accumulation order is fixed.
template <typename T>
void aggregate_pull(const GroupedCsr& grouped, const DenseMatrix<T>& input, DenseMatrix<T>& output,
                    CommitMode mode, int workers, StageCounters* counters = nullptr,
                    std::size_t col_chunk = 0) {
    const CsrView& csr = grouped.base;
    if (output.rows != csr.n) throw ShapeError("aggregate_pull: output rows != dest count");
    if (output.cols != input.cols) throw ShapeError("aggregate_pull: input/output dims differ");
    const std::size_t dim = input.cols;
    const std::size_t chunk = (col_chunk == 0 || col_chunk > dim) ? dim : col_chunk;
    const std::size_t n_chunks = dim == 0 ? 1 : (dim + chunk - 1) / chunk;
    const int nthreads = resolve_workers(workers);
    std::uint64_t atomics = 0;

    if (mode == CommitMode::Deterministic) {
        const std::ptrdiff_t tasks = static_cast<std::ptrdiff_t>(csr.n) * n_chunks;
#pragma omp parallel for schedule(dynamic, 64) num_threads(nthreads)
        for (std::ptrdiff_t task = 0; task < tasks; ++task) {
            const VertexId v = static_cast<VertexId>(task / n_chunks);
            const std::size_t c0 = (task % n_chunks) * chunk;
            const std::size_t c1 = std::min(dim, c0 + chunk);
            T* out = output.data.data() + std::size_t{v} * dim;
            for (EdgeIndex e = csr.offsets[v]; e < csr.offsets[v + 1]; ++e) {
                const T w = static_cast<T>(csr.weights[e]);
                const T* in = input.data.data() + std::size_t{csr.neighbors[e]} * dim;
                for (std::size_t j = c0; j < c1; ++j) out[j] += w * in[j];
            }
            for (std::size_t j = c0; j < c1; ++j) out[j] += T(0);
        }
    } else {
        const std::ptrdiff_t tasks =
            static_cast<std::ptrdiff_t>(grouped.groups.size()) * n_chunks;
#pragma omp parallel num_threads(nthreads) reduction(+ : atomics)
        {
            std::vector<T> scratch(chunk, T(0));
#pragma omp for schedule(dynamic, 32)
            for (std::ptrdiff_t task = 0; task < tasks; ++task) {
                const auto& g = grouped.groups[task / n_chunks];
                const std::size_t c0 = (task % n_chunks) * chunk;
                const std::size_t c1 = std::min(dim, c0 + chunk);
                const std::size_t width = c1 - c0;
                std::fill(scratch.begin(), scratch.begin() + width, T(0));
                for (EdgeIndex e = g.edge_begin; e < g.edge_end; ++e) {
                    const T w = static_cast<T>(csr.weights[e]);
                    const T* in =
                        input.data.data() + std::size_t{csr.neighbors[e]} * dim + c0;
                    for (std::size_t j = 0; j < width; ++j) scratch[j] += w * in[j];
                }
                T* out = output.data.data() + std::size_t{g.dest} * dim + c0;
                if (grouped.groups_of(g.dest) == 1) {
                    for (std::size_t j = 0; j < width; ++j) out[j] += scratch[j];
                } else {
                    for (std::size_t j = 0; j < width; ++j) {
#pragma omp atomic
                        out[j] += scratch[j];
                    }
                    atomics += width;
                }
            }
        }
    }

    if (counters) {
        counters->edges_traversed += csr.edge_count();
        counters->groups_executed += grouped.groups.size();
        counters->atomic_commits += atomics;
    }
}

// Same pull, restricted to active destinations and active sources. Inactive
// destinations leave their zeroed rows untouched; inactive source terms are
// skipped rather than added as zeros. Counts the skipped work.
template <typename T>
void aggregate_pull_filtered(const GroupedCsr& grouped, const DenseMatrix<T>& input,
                             DenseMatrix<T>& output, const std::vector<std::uint8_t>& dest_active,
                             const std::vector<std::uint8_t>& src_active, CommitMode mode,
                             int workers, StageCounters* counters = nullptr) {
    const CsrView& csr = grouped.base;
    if (output.rows != csr.n) throw ShapeError("aggregate_pull_filtered: output rows != dest count");
    if (output.cols != input.cols) throw ShapeError("aggregate_pull_filtered: dims differ");
    const std::size_t dim = input.cols;
    const int nthreads = resolve_workers(workers);
    std::uint64_t edges = 0, groups = 0, atomics = 0, eskip = 0, gskip = 0;

    if (mode == CommitMode::Deterministic) {
#pragma omp parallel for schedule(dynamic, 64) num_threads(nthreads) \
    reduction(+ : edges, groups, eskip, gskip)
        for (std::ptrdiff_t v = 0; v < static_cast<std::ptrdiff_t>(csr.n); ++v) {
            if (!dest_active[v]) {
                gskip += grouped.groups_of(static_cast<VertexId>(v));
                eskip += csr.offsets[v + 1] - csr.offsets[v];
                continue;
            }
            groups += grouped.groups_of(static_cast<VertexId>(v));
            T* out = output.data.data() + v * dim;
            for (EdgeIndex e = csr.offsets[v]; e < csr.offsets[v + 1]; ++e) {
                const VertexId u = csr.neighbors[e];
                if (!src_active[u]) {
                    ++eskip;
                    continue;
                }
                ++edges;
                const T w = static_cast<T>(csr.weights[e]);
                const T* in = input.data.data() + std::size_t{u} * dim;
                for (std::size_t j = 0; j < dim; ++j) out[j] += w * in[j];
            }
            for (std::size_t j = 0; j < dim; ++j) out[j] += T(0);
        }
    } else {
#pragma omp parallel num_threads(nthreads) reduction(+ : edges, groups, atomics, eskip, gskip)
        {
            std::vector<T> scratch(dim, T(0));
#pragma omp for schedule(dynamic, 32)
            for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(grouped.groups.size());
                 ++i) {
                const auto& g = grouped.groups[i];
                if (!dest_active[g.dest]) {
                    ++gskip;
                    eskip += g.edge_end - g.edge_begin;
                    continue;
                }
                ++groups;
                std::fill(scratch.begin(), scratch.end(), T(0));
                for (EdgeIndex e = g.edge_begin; e < g.edge_end; ++e) {
                    const VertexId u = csr.neighbors[e];
                    if (!src_active[u]) {
                        ++eskip;
                        continue;
                    }
                    ++edges;
                    const T w = static_cast<T>(csr.weights[e]);
                    const T* in = input.data.data() + std::size_t{u} * dim;
                    for (std::size_t j = 0; j < dim; ++j) scratch[j] += w * in[j];
                }
                T* out = output.data.data() + std::size_t{g.dest} * dim;
                if (grouped.groups_of(g.dest) == 1) {
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
        counters->edges_traversed += edges;
        counters->groups_executed += groups;
        counters->atomic_commits += atomics;
        counters->edges_skipped += eskip;
        counters->groups_skipped += gskip;
    }
}

}  // namespace pathgcn
