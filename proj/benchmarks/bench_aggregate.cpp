#include <benchmark/benchmark.h>

#include <random>

#include "pathgcn/aggregate.hpp"
#include "pathgcn/csr_graph.hpp"
#include "pathgcn/rmat.hpp"

using namespace pathgcn;

namespace {

CsrGraph bench_graph() {
    RmatParams p;
    p.n = 1 << 14;
    p.m = 1 << 17;
    p.a = 0.45;
    p.b = 0.22;
    p.c = 0.22;
    p.d = 0.11;
    p.seed = 1;
    CsrGraph g = build_undirected_csr(gen_rmat(p));
    assign_edge_weights(g, WeightMode::Unit);
    return g;
}

MatrixD bench_input(VertexId n, std::size_t dim) {
    MatrixD x(n, dim);
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (double& v : x.data) v = u(rng);
    return x;
}

}  // namespace

static void AggregateAcrossGroupSizes(benchmark::State& state) {
    static const CsrGraph g = bench_graph();
    static const MatrixD x = bench_input(g.n, 16);
    const GroupedCsr grouped = group_neighbors(g.view(), static_cast<VertexId>(state.range(0)));
    MatrixD y(g.n, 16);
    for (auto _ : state) {
        y.zero();
        aggregate_pull(grouped, x, y, CommitMode::Fast, 0);
        benchmark::DoNotOptimize(y.data.data());
    }
    state.SetItemsProcessed(state.iterations() * g.m());
}
BENCHMARK(AggregateAcrossGroupSizes)->RangeMultiplier(2)->Range(1, 128);

static void AggregateCommitModes(benchmark::State& state) {
    static const CsrGraph g = bench_graph();
    static const MatrixD x = bench_input(g.n, 16);
    const GroupedCsr grouped = group_neighbors(g.view(), 16);
    const CommitMode mode = state.range(0) ? CommitMode::Fast : CommitMode::Deterministic;
    MatrixD y(g.n, 16);
    for (auto _ : state) {
        y.zero();
        aggregate_pull(grouped, x, y, mode, 0);
        benchmark::DoNotOptimize(y.data.data());
    }
    state.SetItemsProcessed(state.iterations() * g.m());
}
BENCHMARK(AggregateCommitModes)->Arg(0)->Arg(1);

static void AggregateFeatureWidth(benchmark::State& state) {
    static const CsrGraph g = bench_graph();
    const std::size_t dim = static_cast<std::size_t>(state.range(0));
    const MatrixD x = bench_input(g.n, dim);
    const GroupedCsr grouped = group_neighbors(g.view(), 16);
    MatrixD y(g.n, dim);
    for (auto _ : state) {
        y.zero();
        aggregate_pull(grouped, x, y, CommitMode::Fast, 0);
        benchmark::DoNotOptimize(y.data.data());
    }
    state.SetItemsProcessed(state.iterations() * g.m() * dim);
}
BENCHMARK(AggregateFeatureWidth)->RangeMultiplier(2)->Range(8, 128);
