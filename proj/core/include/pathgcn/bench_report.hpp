#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "pathgcn/engine.hpp"
#include "pathgcn/execution_path.hpp"

namespace pathgcn {

using json = nlohmann::ordered_json;

// Machine-readable outcome of one training run: config echo, per-stage wall
// times and work counters, analytic memory accounting, chosen group sizes
// and the loss trajectory. Serialized as JSON with stable key order.
struct BenchReport {
    json config;
    GraphStats stats;
    VertexId max_degree = 0;
    std::vector<std::size_t> frontier_sizes;  // |N^0| .. |N^L| when computed
    VertexId forward_gs = 0;
    std::vector<VertexId> path_gs;  // layer L-1 .. 0, empty unless epp
    WorkCounters counters;
    FootprintReport memory;
    std::vector<double> loss_per_epoch;
    double preparation_seconds = 0.0;
    double training_seconds = 0.0;
    double total_seconds = 0.0;
    std::uint64_t log_clamps = 0;

    json to_json() const;
};

// Throws ConfigError if required keys or types are missing.
void validate_report(const json& report);

void write_report_file(const std::string& path, const json& report);
json load_report_file(const std::string& path);

struct StageRatio {
    std::string stage;
    double baseline_seconds;
    double candidate_seconds;
    double ratio;  // candidate / baseline
};

struct CompareSummary {
    std::vector<StageRatio> stages;
    double backward_aggregation_speedup = 1.0;  // baseline / candidate
    double overall_speedup = 1.0;
    double edge_traversal_ratio = 1.0;  // candidate / baseline backward edges
    json to_json() const;
    std::string to_text() const;
};

// Requires matching graph shape, seed and layer count; ConfigError otherwise.
CompareSummary compare_reports(const json& baseline, const json& candidate);

}  // namespace pathgcn
