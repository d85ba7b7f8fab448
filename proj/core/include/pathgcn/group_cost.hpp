#pragma once

#include <functional>
#include <vector>

#include "pathgcn/grouping.hpp"

namespace pathgcn {

// Deterministic stand-in for wall-clock measurement: groups are dealt
// round-robin to workers, a group's load is its edge count times dim, and
// every group after a vertex's first pays an atomic commit of dim writes.
//   cost = max worker load + lambda * atomic writes
struct GroupCostModel {
    int worker_count = 1;
    double atomic_penalty = 0.25;  // lambda
};

double grouping_cost(const GroupedCsr& grouped, std::size_t dim, const GroupCostModel& model);

struct GsSweepEntry {
    VertexId gs;
    double cost;
};

struct GsSweepResult {
    VertexId best_gs = 1;
    std::vector<GsSweepEntry> table;
};

// Cost of one candidate grouping; either the model above or a measured
// median of repeated aggregation runs.
using GroupingEvaluator = std::function<double(const GroupedCsr&)>;

GroupingEvaluator cost_model_evaluator(std::size_t dim, GroupCostModel model);

// Doubling candidates 1, 2, 4, ..., 2^ceil(log2(max_degree)).
std::vector<VertexId> default_gs_candidates(VertexId max_degree);

// Enumerates the candidates and returns the argmin (ties toward the smallest
// gs) together with the full cost table.
GsSweepResult oracle_gs(CsrView csr, const std::vector<VertexId>& candidates,
                        const GroupingEvaluator& evaluate);

}  // namespace pathgcn
