#pragma once

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pathgcn/bench_report.hpp"
#include "pathgcn/engine.hpp"

namespace pathgcn {

// Path structure statistics fed to the gs strategies: the vertex array is
// the destination set, the edge count is the pull-edge count.
inline GraphStats path_stats(const ExecutionPath& p) {
    GraphStats s;
    s.n_vertices = p.dest_count();
    s.n_undirected_edges = p.edge_count();
    s.avg_degree = p.dest_count() == 0
                       ? 0.0
                       : static_cast<double>(p.edge_count()) / static_cast<double>(p.dest_count());
    return s;
}

inline VertexId view_max_degree(CsrView csr) {
    VertexId best = 0;
    for (VertexId v = 0; v < csr.n; ++v) best = std::max(best, csr.degree(v));
    return best;
}

// Median-of-k wall time of one aggregation pass at the given width; the
// measured variant of the enumeration oracle. Candidates must run
// sequentially, which oracle_gs already guarantees.
template <typename T>
GroupingEvaluator measured_evaluator(std::size_t dim, std::size_t input_rows, int repeats,
                                     int workers, CommitMode commit, std::uint64_t seed) {
    DenseMatrix<T> input(input_rows, dim);
    std::mt19937_64 rng(derive_seed(seed, 17));
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (T& v : input.data) v = static_cast<T>(u(rng));
    return [input = std::move(input), dim, repeats, workers, commit](const GroupedCsr& grouped) {
        std::vector<double> times;
        DenseMatrix<T> output(grouped.base.n, dim);
        for (int i = 0; i < repeats; ++i) {
            output.zero();
            StageTimer t;
            aggregate_pull(grouped, input, output, commit, workers, nullptr);
            times.push_back(t.stop());
        }
        std::sort(times.begin(), times.end());
        return times[times.size() / 2];
    };
}

template <typename T>
VertexId choose_gs(const GsStrategy& strategy, CsrView csr, const GraphStats& stats,
                   std::size_t dim, std::size_t input_rows, int workers, CommitMode commit,
                   std::uint64_t seed, GsSweepResult* sweep_out = nullptr) {
    switch (strategy.kind) {
        case GsStrategyKind::Fixed:
            return strategy.fixed;
        case GsStrategyKind::Regression:
            return regression_gs(stats, strategy.model);
        case GsStrategyKind::OracleCost: {
            const auto candidates = default_gs_candidates(view_max_degree(csr));
            const GroupCostModel model{resolve_workers(workers), strategy.atomic_penalty};
            auto sweep = oracle_gs(csr, candidates, cost_model_evaluator(dim, model));
            if (sweep_out) *sweep_out = sweep;
            return sweep.best_gs;
        }
        case GsStrategyKind::OracleMeasured: {
            const auto candidates = default_gs_candidates(view_max_degree(csr));
            auto sweep = oracle_gs(csr, candidates,
                                   measured_evaluator<T>(dim, input_rows, strategy.measured_repeats,
                                                         workers, commit, seed));
            if (sweep_out) *sweep_out = sweep;
            return sweep.best_gs;
        }
    }
    throw ConfigError("unknown gs strategy");
}

template <typename T>
struct TrainResult {
    ModelParams<T> params;
    BenchReport report;
};

namespace detail {

// Frontiers, paths, per-path group sizes and groupings; the epp preparation
// work, timed as one stage.
struct PreparedPaths {
    FrontierSets frontiers;
    std::vector<ExecutionPath> paths;
    std::vector<GroupedCsr> groups;
    std::vector<VertexId> gs;
};

template <typename T>
PreparedPaths prepare_paths(const RunConfig& cfg, const CsrGraph& g, const TrainingSet& vt,
                            CommitMode commit, WorkCounters& counters) {
    StageTimer timer;
    PreparedPaths out;
    out.frontiers = compute_frontiers(g, vt, cfg.layers);
    out.paths = prepare_all_paths(g, out.frontiers);
    const std::uint64_t stamp = path_fingerprint(g, vt, cfg.layers);
    const auto dims = cfg.dims();
    for (std::size_t i = 0; i < out.paths.size(); ++i) {
        ExecutionPath& path = out.paths[i];
        path.fingerprint = stamp;
        const std::size_t l = cfg.layers - 1 - i;
        const std::size_t agg_dim = l == 0 ? cfg.f : dims[l - 1];
        const VertexId gs = choose_gs<T>(cfg.gs, path.view(), path_stats(path), agg_dim,
                                         path.src_count(), cfg.workers, commit,
                                         derive_seed(cfg.seed, 100 + i));
        out.gs.push_back(gs);
        out.groups.push_back(group_neighbors(path.view(), gs));
    }
    counters.path_preparation.wall_seconds += timer.stop();
    return out;
}

}  // namespace detail

template <typename T>
TrainResult<T> train_t(const RunConfig& cfg, const CsrGraph& g, const TrainingSet& vt) {
    cfg.validate();
    const CommitMode commit = cfg.deterministic ? CommitMode::Deterministic : CommitMode::Fast;
#ifdef _OPENMP
    if (cfg.workers > 0) omp_set_num_threads(cfg.workers);
#endif

    TrainResult<T> result;
    BenchReport& report = result.report;
    WorkCounters& counters = report.counters;
    const std::size_t L = cfg.layers;
    const auto dims = cfg.dims();
    report.stats = graph_stats(g);
    report.max_degree = g.max_degree();

    // the input graph is grouped once for forward (and for the full-graph
    // backward variants)
    const VertexId forward_gs = choose_gs<T>(cfg.gs, g.view(), report.stats, cfg.f, g.n,
                                             cfg.workers, commit, derive_seed(cfg.seed, 99));
    const GroupedCsr graph_grouped = group_neighbors(g.view(), forward_gs);
    report.forward_gs = forward_gs;

    detail::PreparedPaths prep;
    bool prepared = false;
    const bool needs_paths =
        cfg.mode == TrainMode::EppPreprocess || cfg.mode == TrainMode::EppOnTheFly;
    if (cfg.mode == TrainMode::EppPreprocess) {
        prep = detail::prepare_paths<T>(cfg, g, vt, commit, counters);
        prepared = true;
    } else if (cfg.mode == TrainMode::IfElse) {
        StageTimer t;
        prep.frontiers = compute_frontiers(g, vt, L);
        counters.path_preparation.wall_seconds += t.stop();
    }

    result.params = init_params<T>(cfg.f, dims, cfg.seed, cfg.adam);
    const DenseMatrix<T> x0 = random_features<T>(g.n, cfg.f, cfg.seed);
    const DenseMatrix<T> reference = random_reference<T>(g.n, cfg.classes, vt, cfg.seed);
    const std::uint64_t stamp = path_fingerprint(g, vt, L);

    report.loss_per_epoch.reserve(cfg.epochs);
    for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
        try {
            EpochArtifacts<T> arts = forward(graph_grouped, x0, result.params, commit,
                                             cfg.workers, counters, cfg.col_chunk);

            StageTimer tl;
            const double loss = ce_loss(arts.x[L], reference, vt, &report.log_clamps);
            DenseMatrix<T> top_grad = top_grad_from_probs(arts.x[L], reference, vt);
            counters.loss_grad.wall_seconds += tl.stop();
            if (!std::isfinite(loss)) throw NumericError("loss is not finite");
            report.loss_per_epoch.push_back(loss);

            if (cfg.mode == TrainMode::EppOnTheFly && !prepared) {
                prep = detail::prepare_paths<T>(cfg, g, vt, commit, counters);
                prepared = true;
            }

            std::vector<DenseMatrix<T>> w_grads;
            switch (cfg.mode) {
                case TrainMode::AllActive:
                    w_grads = backward_all_active(graph_grouped, arts, top_grad, result.params,
                                                  commit, cfg.workers, counters, nullptr,
                                                  cfg.col_chunk);
                    break;
                case TrainMode::IfElse:
                    w_grads = backward_ifelse(graph_grouped, prep.frontiers, arts, top_grad,
                                              result.params, commit, cfg.workers, counters);
                    break;
                case TrainMode::EppPreprocess:
                case TrainMode::EppOnTheFly:
                    w_grads = backward_epp(prep.paths, prep.groups, prep.frontiers, arts,
                                           top_grad, result.params, cfg.gather, commit,
                                           cfg.workers, counters, stamp, cfg.col_chunk);
                    break;
            }

            StageTimer tu;
            for (std::size_t l = 0; l < L; ++l)
                adam_step(result.params.weights[l], w_grads[l], result.params.adam[l]);
            counters.parameter_update.wall_seconds += tu.stop();
        } catch (const NumericError& e) {
            throw NumericError("epoch " + std::to_string(epoch) + ": " + e.what());
        }
    }

    // footprint accounting and the report
    TrainingShapes shapes{cfg.f, dims};
    const std::size_t real_bytes = cfg.precision == Precision::F64 ? 8 : 4;
    report.memory = path_footprint_bytes(needs_paths ? prep.paths : std::vector<ExecutionPath>{},
                                         g, shapes, real_bytes);
    if (cfg.mode != TrainMode::AllActive)
        for (const auto& level : prep.frontiers.levels)
            report.frontier_sizes.push_back(level.size());
    report.path_gs = prep.gs;

    report.preparation_seconds = counters.path_preparation.wall_seconds;
    const double core = counters.forward_aggregation.wall_seconds +
                        counters.forward_combination.wall_seconds +
                        counters.loss_grad.wall_seconds +
                        counters.backward_combination.wall_seconds +
                        counters.backward_aggregation.wall_seconds +
                        counters.parameter_update.wall_seconds;
    report.training_seconds =
        core + (cfg.mode == TrainMode::EppOnTheFly ? report.preparation_seconds : 0.0);
    report.total_seconds = core + report.preparation_seconds;

    report.config = {{"graph", cfg.graph_path},
                     {"training_set", cfg.training_set_path},
                     {"ratio", cfg.ratio},
                     {"seed", cfg.seed},
                     {"layers", cfg.layers},
                     {"f", cfg.f},
                     {"dim0", cfg.dim0},
                     {"classes", cfg.classes},
                     {"epochs", cfg.epochs},
                     {"mode", to_string(cfg.mode)},
                     {"gather", to_string(cfg.gather)},
                     {"gs_strategy", gs_strategy_label(cfg.gs)},
                     {"weight_mode", to_string(cfg.weight_mode)},
                     {"precision", to_string(cfg.precision)},
                     {"deterministic", cfg.deterministic},
                     {"workers", cfg.workers},
                     {"col_chunk", cfg.col_chunk},
                     {"lr", cfg.adam.lr}};
    return result;
}

// Precision dispatch for callers that only need the report.
inline BenchReport train(const RunConfig& cfg, const CsrGraph& g, const TrainingSet& vt) {
    if (cfg.precision == Precision::F32) return train_t<float>(cfg, g, vt).report;
    return train_t<double>(cfg, g, vt).report;
}

}  // namespace pathgcn
