#include "pathgcn/bench_report.hpp"

#include <array>
#include <fstream>
#include <limits>
#include <sstream>

#include "pathgcn/error.hpp"

namespace pathgcn {

namespace {

constexpr std::array<const char*, 7> kStageKeys = {
    "forward_aggregation", "forward_combination",  "loss_grad", "backward_combination",
    "backward_aggregation", "parameter_update", "path_preparation"};

json counters_json(const StageCounters& c) {
    json out;
    out["edges_traversed"] = c.edges_traversed;
    out["groups_executed"] = c.groups_executed;
    out["atomic_commits"] = c.atomic_commits;
    out["edges_skipped"] = c.edges_skipped;
    out["groups_skipped"] = c.groups_skipped;
    out["wall_seconds"] = c.wall_seconds;
    return out;
}

const StageCounters& stage_of(const WorkCounters& w, std::size_t i) {
    switch (i) {
        case 0: return w.forward_aggregation;
        case 1: return w.forward_combination;
        case 2: return w.loss_grad;
        case 3: return w.backward_combination;
        case 4: return w.backward_aggregation;
        case 5: return w.parameter_update;
        default: return w.path_preparation;
    }
}

}  // namespace

json BenchReport::to_json() const {
    json out;
    out["schema"] = "pathgcn-report-v1";
    out["config"] = config;
    out["graph"] = {{"n_vertices", stats.n_vertices},
                    {"n_undirected_edges", stats.n_undirected_edges},
                    {"avg_degree", stats.avg_degree},
                    {"max_degree", max_degree}};
    out["frontier_sizes"] = frontier_sizes;
    out["gs"] = {{"forward", forward_gs}, {"paths", path_gs}};

    json stages;
    json work;
    for (std::size_t i = 0; i < kStageKeys.size(); ++i) {
        const StageCounters& c = stage_of(counters, i);
        stages[kStageKeys[i]] = c.wall_seconds;
        work[kStageKeys[i]] = counters_json(c);
    }
    out["stage_seconds"] = stages;
    out["counters"] = work;
    out["backward_edges_per_layer"] = counters.backward_edges_per_layer;
    out["memory"] = {{"baseline_bytes", memory.baseline_bytes},
                     {"epp_bytes", memory.epp_bytes},
                     {"ratio", memory.ratio}};
    out["loss_per_epoch"] = loss_per_epoch;
    out["final_loss"] = loss_per_epoch.empty() ? 0.0 : loss_per_epoch.back();
    out["log_clamps"] = log_clamps;
    out["preparation_seconds"] = preparation_seconds;
    out["training_seconds"] = training_seconds;
    out["total_seconds"] = total_seconds;
    return out;
}

void validate_report(const json& r) {
    auto need = [&r](const char* key) {
        if (!r.contains(key)) throw ConfigError(std::string("report: missing key '") + key + "'");
    };
    for (const char* key : {"schema", "config", "graph", "gs", "stage_seconds", "counters",
                            "backward_edges_per_layer", "memory", "loss_per_epoch",
                            "preparation_seconds", "training_seconds", "total_seconds"})
        need(key);
    if (r["schema"] != "pathgcn-report-v1")
        throw ConfigError("report: unknown schema " + r["schema"].dump());
    for (const char* key : kStageKeys) {
        if (!r["stage_seconds"].contains(key))
            throw ConfigError(std::string("report: missing stage '") + key + "'");
        if (!r["stage_seconds"][key].is_number())
            throw ConfigError(std::string("report: stage '") + key + "' is not a number");
    }
    if (!r["loss_per_epoch"].is_array()) throw ConfigError("report: loss_per_epoch not an array");
    for (const char* key : {"baseline_bytes", "epp_bytes", "ratio"})
        if (!r["memory"].contains(key))
            throw ConfigError(std::string("report: memory missing '") + key + "'");
}

void write_report_file(const std::string& path, const json& report) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write report: " + path);
    out << report.dump(2) << '\n';
}

json load_report_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read report: " + path);
    json r = json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (r.is_discarded()) throw IoError("report is not valid JSON: " + path);
    return r;
}

json CompareSummary::to_json() const {
    json out;
    out["stages"] = json::array();
    for (const StageRatio& s : stages)
        out["stages"].push_back({{"stage", s.stage},
                                 {"baseline_seconds", s.baseline_seconds},
                                 {"candidate_seconds", s.candidate_seconds},
                                 {"ratio", s.ratio}});
    out["backward_aggregation_speedup"] = backward_aggregation_speedup;
    out["overall_speedup"] = overall_speedup;
    out["edge_traversal_ratio"] = edge_traversal_ratio;
    return out;
}

std::string CompareSummary::to_text() const {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    for (const StageRatio& s : stages)
        out << s.stage << ": " << s.ratio << "x (" << s.candidate_seconds << "s vs "
            << s.baseline_seconds << "s)\n";
    out << "backward-aggregation speedup: " << backward_aggregation_speedup << "x\n";
    out << "overall speedup: " << overall_speedup << "x\n";
    out << "backward edge-traversal ratio: " << edge_traversal_ratio << "\n";
    return out.str();
}

CompareSummary compare_reports(const json& baseline, const json& candidate) {
    validate_report(baseline);
    validate_report(candidate);
    for (const char* key : {"n_vertices", "n_undirected_edges"})
        if (baseline["graph"][key] != candidate["graph"][key])
            throw ConfigError("compare: reports come from different graphs");
    for (const char* key : {"seed", "layers"})
        if (baseline["config"][key] != candidate["config"][key])
            throw ConfigError(std::string("compare: reports differ in ") + key);

    CompareSummary sum;
    double base_total = 0.0, cand_total = 0.0;
    for (const char* key : kStageKeys) {
        StageRatio sr;
        sr.stage = key;
        sr.baseline_seconds = baseline["stage_seconds"][key].get<double>();
        sr.candidate_seconds = candidate["stage_seconds"][key].get<double>();
        if (sr.baseline_seconds == 0.0)
            sr.ratio = sr.candidate_seconds == 0.0 ? 1.0
                                                   : std::numeric_limits<double>::infinity();
        else
            sr.ratio = sr.candidate_seconds / sr.baseline_seconds;
        sum.stages.push_back(sr);
        base_total += sr.baseline_seconds;
        cand_total += sr.candidate_seconds;
    }
    const double base_bw = baseline["stage_seconds"]["backward_aggregation"].get<double>();
    const double cand_bw = candidate["stage_seconds"]["backward_aggregation"].get<double>();
    sum.backward_aggregation_speedup = cand_bw == 0.0 ? 1.0 : base_bw / cand_bw;
    if (base_bw == 0.0 && cand_bw == 0.0) sum.backward_aggregation_speedup = 1.0;
    sum.overall_speedup = cand_total == 0.0 ? 1.0 : base_total / cand_total;
    if (base_total == 0.0 && cand_total == 0.0) sum.overall_speedup = 1.0;

    const double base_edges =
        baseline["counters"]["backward_aggregation"]["edges_traversed"].get<double>();
    const double cand_edges =
        candidate["counters"]["backward_aggregation"]["edges_traversed"].get<double>();
    sum.edge_traversal_ratio = base_edges == 0.0 ? 1.0 : cand_edges / base_edges;
    return sum;
}

}  // namespace pathgcn
