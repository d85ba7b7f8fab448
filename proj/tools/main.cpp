#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "pathgcn/bench_report.hpp"
#include "pathgcn/correlation.hpp"
#include "pathgcn/rmat.hpp"
#include "pathgcn/train.hpp"

namespace pg = pathgcn;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitNumeric = 4;

int workers_from_env() {
    const char* env = std::getenv("EPP_WORKERS");
    if (!env) return 0;
    const int v = std::atoi(env);
    return v > 0 ? v : 0;
}

pg::CsrGraph load_graph(const std::string& path, pg::WeightMode weights) {
    pg::EdgeList edges = pg::load_edge_list_file(path);
    if (edges.self_loops_dropped > 0)
        std::cerr << "warning: dropped " << edges.self_loops_dropped << " self loops\n";
    pg::CsrGraph g = pg::build_undirected_csr(edges);
    pg::assign_edge_weights(g, weights);
    return g;
}

pg::TrainingSet resolve_training_set(const pg::RunConfig& cfg, const pg::CsrGraph& g) {
    if (!cfg.training_set_path.empty())
        return pg::load_training_set_file(cfg.training_set_path, g.n);
    return pg::sample_training_set(g.n, cfg.ratio, cfg.seed);
}

std::vector<pg::VertexId> parse_candidates(const std::string& spec, pg::VertexId max_degree) {
    if (spec.empty()) return pg::default_gs_candidates(max_degree);
    const std::size_t dots = spec.find("..");
    std::vector<pg::VertexId> out;
    if (dots != std::string::npos) {
        const long lo = std::stol(spec.substr(0, dots));
        const long hi = std::stol(spec.substr(dots + 2));
        if (lo < 1 || hi < lo) throw pg::ConfigError("bad candidate range: " + spec);
        for (long v = lo; v <= hi; ++v) out.push_back(static_cast<pg::VertexId>(v));
        return out;
    }
    std::istringstream in(spec);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        const long v = std::stol(tok);
        if (v < 1) throw pg::ConfigError("candidate group sizes must be >= 1");
        out.push_back(static_cast<pg::VertexId>(v));
    }
    if (out.empty()) throw pg::ConfigError("empty candidate list");
    return out;
}

struct TrainArgs {
    pg::RunConfig cfg;
    std::string mode = "epp-preprocess";
    std::string gather = "local";
    std::string gs = "regression";
    std::string weights = "unit";
    std::string precision = "f64";
    bool fast = false;
};

int cmd_train(TrainArgs& args) {
    args.cfg.mode = pg::parse_train_mode(args.mode);
    args.cfg.gather = pg::parse_gather_mode(args.gather);
    args.cfg.gs = pg::parse_gs_strategy(args.gs);
    args.cfg.weight_mode = pg::parse_weight_mode(args.weights);
    args.cfg.precision = pg::parse_precision(args.precision);
    args.cfg.deterministic = !args.fast;
    if (args.cfg.workers == 0) args.cfg.workers = workers_from_env();
    args.cfg.validate();

    const pg::CsrGraph g = load_graph(args.cfg.graph_path, args.cfg.weight_mode);
    const pg::TrainingSet vt = resolve_training_set(args.cfg, g);

    pg::BenchReport report = pg::train(args.cfg, g, vt);
    pg::json out = report.to_json();
    if (!args.cfg.baseline_report_path.empty()) {
        const pg::json baseline = pg::load_report_file(args.cfg.baseline_report_path);
        out["speedup_vs_baseline"] = pg::compare_reports(baseline, out).to_json();
    }
    if (!args.cfg.out_path.empty())
        pg::write_report_file(args.cfg.out_path, out);
    else
        std::cout << out.dump(2) << '\n';

    std::cout << "trained " << args.cfg.epochs << " epochs on " << g.n << " vertices, final loss "
              << (report.loss_per_epoch.empty() ? 0.0 : report.loss_per_epoch.back()) << '\n';
    return 0;
}

struct PrepareArgs {
    pg::RunConfig cfg;
    std::string weights = "unit";
    bool dump = false;
};

int cmd_prepare(PrepareArgs& args) {
    args.cfg.weight_mode = pg::parse_weight_mode(args.weights);
    args.cfg.validate();
    const pg::CsrGraph g = load_graph(args.cfg.graph_path, args.cfg.weight_mode);
    const pg::TrainingSet vt = resolve_training_set(args.cfg, g);

    const pg::FrontierSets frontiers = pg::compute_frontiers(g, vt, args.cfg.layers);
    std::cout << "frontiers:";
    for (std::size_t k = 0; k < frontiers.levels.size(); ++k)
        std::cout << " |N^" << k << "|=" << frontiers.levels[k].size();
    std::cout << '\n';

    const auto paths = pg::prepare_all_paths(g, frontiers);
    for (const pg::ExecutionPath& p : paths)
        std::cout << "SG_" << p.layer << ": " << p.dest_count() << " dests / " << p.edge_count()
                  << " edges\n";
    if (args.dump)
        for (const pg::ExecutionPath& p : paths) pg::dump_path(std::cout, p);

    const pg::TrainingShapes shapes{args.cfg.f, args.cfg.dims()};
    const auto footprint = pg::path_footprint_bytes(paths, g, shapes);
    std::cout.setf(std::ios::fixed);
    std::cout.precision(4);
    std::cout << "footprint ratio: " << footprint.ratio << " (baseline "
              << footprint.baseline_bytes << " bytes, epp " << footprint.epp_bytes << " bytes)\n";
    return 0;
}

struct TuneArgs {
    std::string graph;
    std::string eval = "cost";
    std::string candidates;
    std::string out;
    std::size_t dim = 16;
    double lambda = 0.25;
    int workers = 0;
    int repeats = 5;
    std::uint64_t seed = 0;
    bool per_layer = false;
    double ratio = 0.1;
    std::size_t layers = 2;
};

int cmd_tune_gs(TuneArgs& args) {
    if (args.workers == 0) args.workers = workers_from_env();
    const pg::CsrGraph g = load_graph(args.graph, pg::WeightMode::Unit);

    bool first_sweep = true;
    auto sweep_one = [&](pg::CsrView csr, std::size_t input_rows, const std::string& label) {
        const auto candidates = parse_candidates(args.candidates, pg::view_max_degree(csr));
        pg::GsSweepResult sweep;
        if (args.eval == "cost") {
            const pg::GroupCostModel model{pg::resolve_workers(args.workers), args.lambda};
            sweep = pg::oracle_gs(csr, candidates, pg::cost_model_evaluator(args.dim, model));
        } else if (args.eval == "measured") {
            sweep = pg::oracle_gs(csr, candidates,
                                  pg::measured_evaluator<double>(args.dim, input_rows,
                                                                 args.repeats, args.workers,
                                                                 pg::CommitMode::Fast, args.seed));
        } else {
            throw pg::ConfigError("unknown evaluator: " + args.eval);
        }
        std::ostream* out = &std::cout;
        std::ofstream file;
        if (!args.out.empty()) {
            file.open(args.out, first_sweep ? std::ios::out : std::ios::app);
            if (!file) throw pg::IoError("cannot write " + args.out);
            out = &file;
        }
        first_sweep = false;
        if (!label.empty()) *out << "# " << label << '\n';
        *out << "gs,cost\n";
        for (const auto& e : sweep.table) *out << e.gs << ',' << e.cost << '\n';
        *out << "# chosen gs = " << sweep.best_gs << '\n';
        std::cout << (label.empty() ? std::string("graph") : label) << ": chosen gs = "
                  << sweep.best_gs << '\n';
    };

    if (!args.per_layer) {
        sweep_one(g.view(), g.n, "");
        return 0;
    }
    const pg::TrainingSet vt = pg::sample_training_set(g.n, args.ratio, args.seed);
    const pg::FrontierSets frontiers = pg::compute_frontiers(g, vt, args.layers);
    const auto paths = pg::prepare_all_paths(g, frontiers);
    for (const pg::ExecutionPath& p : paths)
        sweep_one(p.view(), p.src_count(), "SG_" + std::to_string(p.layer));
    return 0;
}

struct FitArgs {
    std::string samples;
    std::string out;
};

int cmd_fit_gs(FitArgs& args) {
    const pg::SampleTable table = pg::load_sample_table_file(args.samples);
    const pg::GsModel model = pg::fit_least_squares(table);
    if (!args.out.empty()) {
        std::ofstream out(args.out);
        if (!out) throw pg::IoError("cannot write " + args.out);
        pg::write_gs_model(out, model);
    } else {
        pg::write_gs_model(std::cout, model);
    }
    std::cout << "residual norm: " << pg::fit_residual_norm(table, model) << '\n';
    return 0;
}

int cmd_stats(FitArgs& args) {
    const pg::SampleTable table = pg::load_sample_table_file(args.samples);
    std::vector<std::vector<double>> columns(4);
    std::vector<double> target;
    for (const pg::SampleRow& row : table.rows) {
        columns[0].push_back(row.n_vertices);
        columns[1].push_back(row.n_edges);
        columns[2].push_back(row.avg_degree);
        columns[3].push_back(row.dim);
        target.push_back(static_cast<double>(row.optimal_gs));
    }
    const auto report = pg::correlation_report(
        columns, {"n_vertices", "n_edges", "avg_degree", "dim"}, target);
    std::cout << "samples: " << report.sample_count << '\n';
    std::cout << "metric,bivariate_r,bivariate_t,partial_r,partial_t\n";
    std::cout.precision(5);
    for (const auto& row : report.rows)
        std::cout << row.metric << ',' << row.bivariate_r << ',' << row.bivariate_t << ','
                  << row.partial_r << ',' << row.partial_t << '\n';
    return 0;
}

struct GenArgs {
    pg::RmatParams params;
    std::uint64_t n = 1024;
    std::uint64_t m = 8192;
    std::string out;
};

int cmd_gen(GenArgs& args) {
    args.params.n = static_cast<pg::VertexId>(args.n);
    args.params.m = args.m;
    const pg::EdgeList edges = pg::gen_rmat(args.params);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!args.out.empty()) {
        file.open(args.out);
        if (!file) throw pg::IoError("cannot write " + args.out);
        out = &file;
    }
    *out << "# rmat n=" << args.params.n << " m=" << args.params.m << " a=" << args.params.a
         << " b=" << args.params.b << " c=" << args.params.c << " d=" << args.params.d
         << " seed=" << args.params.seed << '\n';
    std::uint64_t dropped = 0, written = 0;
    for (const auto& [u, v] : edges.pairs) {
        if (u == v) {
            ++dropped;
            continue;
        }
        *out << u << ' ' << v << '\n';
        ++written;
    }
    std::cout << "wrote " << written << " pairs, dropped " << dropped << " self loops\n";
    return 0;
}

struct CompareArgs {
    std::string baseline;
    std::string candidate;
    std::string out;
};

int cmd_compare(CompareArgs& args) {
    const pg::json a = pg::load_report_file(args.baseline);
    const pg::json b = pg::load_report_file(args.candidate);
    const pg::CompareSummary summary = pg::compare_reports(a, b);
    std::cout << summary.to_text();
    if (!args.out.empty()) pg::write_report_file(args.out, summary.to_json());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GCN training benchmark harness with execution-path backward aggregation"};
    app.require_subcommand(1);

    TrainArgs train_args;
    auto* train = app.add_subcommand("train", "run GCN training and write a report");
    train->add_option("--graph", train_args.cfg.graph_path, "edge-list file")->required();
    train->add_option("--ratio", train_args.cfg.ratio, "training ratio in (0,1]");
    train->add_option("--training-set", train_args.cfg.training_set_path,
                      "training-set file (one id per line)");
    train->add_option("--seed", train_args.cfg.seed, "RNG seed");
    train->add_option("--layers", train_args.cfg.layers, "GCN layers (default 2)");
    train->add_option("--features", train_args.cfg.f, "input feature width (default 128)");
    train->add_option("--dim0", train_args.cfg.dim0, "hidden width (default 16)");
    train->add_option("--classes", train_args.cfg.classes, "class count");
    train->add_option("--epochs", train_args.cfg.epochs, "epochs (default 100)");
    train->add_option("--mode", train_args.mode,
                      "all-active | ifelse | epp-preprocess | epp-onthefly");
    train->add_option("--gather", train_args.gather, "epp gather: local | global");
    train->add_option("--gs", train_args.gs,
                      "fixed:K | regression[:coeff-file] | oracle[:cost|:measured]");
    train->add_option("--weights", train_args.weights, "edge weights: unit | sym-norm");
    train->add_option("--precision", train_args.precision, "f64 | f32");
    train->add_flag("--fast", train_args.fast, "atomic commit mode (default deterministic)");
    train->add_flag("--deterministic", [](std::int64_t) {}, "deterministic commit mode (default)");
    train->add_option("--workers", train_args.cfg.workers, "worker threads (0 = hardware)");
    train->add_option("--col-chunk", train_args.cfg.col_chunk,
                      "feature columns per aggregation task (0 = whole row)");
    train->add_option("--lr", train_args.cfg.adam.lr, "Adam learning rate (default 0.01)");
    train->add_option("--out", train_args.cfg.out_path, "report JSON path");
    train->add_option("--baseline", train_args.cfg.baseline_report_path,
                      "baseline report for an embedded speedup summary");

    PrepareArgs prep_args;
    auto* prepare = app.add_subcommand("prepare", "extract execution paths and report sizes");
    prepare->add_option("--graph", prep_args.cfg.graph_path, "edge-list file")->required();
    prepare->add_option("--ratio", prep_args.cfg.ratio, "training ratio");
    prepare->add_option("--training-set", prep_args.cfg.training_set_path, "training-set file");
    prepare->add_option("--seed", prep_args.cfg.seed, "RNG seed");
    prepare->add_option("--layers", prep_args.cfg.layers, "GCN layers");
    prepare->add_option("--features", prep_args.cfg.f, "input feature width");
    prepare->add_option("--dim0", prep_args.cfg.dim0, "hidden width");
    prepare->add_option("--classes", prep_args.cfg.classes, "class count");
    prepare->add_option("--weights", prep_args.weights, "edge weights: unit | sym-norm");
    prepare->add_flag("--dump", prep_args.dump, "dump the full path adjacency");

    TuneArgs tune_args;
    auto* tune = app.add_subcommand("tune-gs", "enumerate group sizes and pick the best");
    tune->add_option("--graph", tune_args.graph, "edge-list file")->required();
    tune->add_option("--dim", tune_args.dim, "feature width used by the evaluator");
    tune->add_option("--eval", tune_args.eval, "cost | measured");
    tune->add_option("--candidates", tune_args.candidates,
                     "explicit list 1,2,4 or dense range 1..64 (default: doubling)");
    tune->add_option("--lambda", tune_args.lambda, "atomic penalty of the cost model");
    tune->add_option("--workers", tune_args.workers, "worker threads");
    tune->add_option("--repeats", tune_args.repeats, "runs per candidate (measured)");
    tune->add_option("--seed", tune_args.seed, "RNG seed");
    tune->add_flag("--per-layer", tune_args.per_layer, "tune each execution path");
    tune->add_option("--ratio", tune_args.ratio, "training ratio (per-layer mode)");
    tune->add_option("--layers", tune_args.layers, "GCN layers (per-layer mode)");
    tune->add_option("--out", tune_args.out, "CSV output path");

    FitArgs fit_args;
    auto* fit = app.add_subcommand("fit-gs", "least-squares fit of the gs regression");
    fit->add_option("--samples", fit_args.samples, "sample table CSV")->required();
    fit->add_option("--out", fit_args.out, "coefficient file");

    FitArgs stats_args;
    auto* stats = app.add_subcommand("stats", "correlation report over a sample table");
    stats->add_option("--samples", stats_args.samples, "sample table CSV")->required();

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a synthetic RMAT edge list");
    gen->add_option("--n", gen_args.n, "vertex count (rounded up to a power of two)");
    gen->add_option("--m", gen_args.m, "edge pair count");
    gen->add_option("--a", gen_args.params.a, "quadrant probability a");
    gen->add_option("--b", gen_args.params.b, "quadrant probability b");
    gen->add_option("--c", gen_args.params.c, "quadrant probability c");
    gen->add_option("--d", gen_args.params.d, "quadrant probability d");
    gen->add_option("--seed", gen_args.params.seed, "RNG seed");
    gen->add_option("--out", gen_args.out, "output edge-list path");

    CompareArgs cmp_args;
    auto* compare = app.add_subcommand("compare", "speedup summary of two reports");
    compare->add_option("baseline", cmp_args.baseline, "baseline report JSON")->required();
    compare->add_option("candidate", cmp_args.candidate, "candidate report JSON")->required();
    compare->add_option("--out", cmp_args.out, "summary JSON path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*train) return cmd_train(train_args);
        if (*prepare) return cmd_prepare(prep_args);
        if (*tune) return cmd_tune_gs(tune_args);
        if (*fit) return cmd_fit_gs(fit_args);
        if (*stats) return cmd_stats(stats_args);
        if (*gen) return cmd_gen(gen_args);
        if (*compare) return cmd_compare(cmp_args);
    } catch (const pg::IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitIo;
    } catch (const pg::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const pg::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const pg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return 0;
}
