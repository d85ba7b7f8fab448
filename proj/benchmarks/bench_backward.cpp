#include <benchmark/benchmark.h>

#include "pathgcn/rmat.hpp"
#include "pathgcn/train.hpp"

using namespace pathgcn;

namespace {

struct BackwardBench {
    CsrGraph graph;
    TrainingSet vt;
    GroupedCsr grouped;
    FrontierSets frontiers;
    std::vector<ExecutionPath> paths;
    std::vector<GroupedCsr> path_groups;
    std::uint64_t stamp;
    ModelParams<double> params;
    EpochArtifacts<double> arts;
    MatrixD top;

    static BackwardBench make() {
        RmatParams p;
        p.n = 1 << 13;
        p.m = 1 << 16;
        p.a = 0.45;
        p.b = 0.22;
        p.c = 0.22;
        p.d = 0.11;
        p.seed = 5;
        BackwardBench b;
        b.graph = build_undirected_csr(gen_rmat(p));
        assign_edge_weights(b.graph, WeightMode::Unit);
        b.vt = sample_training_set(b.graph.n, 0.1, 3);
        b.grouped = group_neighbors(b.graph.view(), 16);
        b.frontiers = compute_frontiers(b.graph, b.vt, 2);
        b.paths = prepare_all_paths(b.graph, b.frontiers);
        b.stamp = path_fingerprint(b.graph, b.vt, 2);
        for (auto& path : b.paths) {
            path.fingerprint = b.stamp;
            b.path_groups.push_back(group_neighbors(path.view(), 8));
        }
        b.params = init_params<double>(64, {16, 4}, 7);
        const MatrixD x0 = random_features<double>(b.graph.n, 64, 7);
        const MatrixD ref = random_reference<double>(b.graph.n, 4, b.vt, 7);
        WorkCounters counters;
        b.arts = forward(b.grouped, x0, b.params, CommitMode::Fast, 0, counters);
        b.top = top_grad_from_probs(b.arts.x[2], ref, b.vt);
        return b;
    }

    static BackwardBench& instance() {
        static BackwardBench b = make();
        return b;
    }
};

}  // namespace

static void BackwardAllActive(benchmark::State& state) {
    auto& b = BackwardBench::instance();
    for (auto _ : state) {
        WorkCounters counters;
        auto grads = backward_all_active(b.grouped, b.arts, b.top, b.params, CommitMode::Fast, 0,
                                         counters);
        benchmark::DoNotOptimize(grads.data());
    }
}
BENCHMARK(BackwardAllActive);

static void BackwardIfElse(benchmark::State& state) {
    auto& b = BackwardBench::instance();
    for (auto _ : state) {
        WorkCounters counters;
        auto grads = backward_ifelse(b.grouped, b.frontiers, b.arts, b.top, b.params,
                                     CommitMode::Fast, 0, counters);
        benchmark::DoNotOptimize(grads.data());
    }
}
BENCHMARK(BackwardIfElse);

static void BackwardEpp(benchmark::State& state) {
    auto& b = BackwardBench::instance();
    for (auto _ : state) {
        WorkCounters counters;
        auto grads = backward_epp(b.paths, b.path_groups, b.frontiers, b.arts, b.top, b.params,
                                  GatherMode::Local, CommitMode::Fast, 0, counters, b.stamp);
        benchmark::DoNotOptimize(grads.data());
    }
}
BENCHMARK(BackwardEpp);

BENCHMARK_MAIN();
