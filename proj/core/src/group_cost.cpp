#include "pathgcn/group_cost.hpp"

#include <algorithm>

#include "pathgcn/error.hpp"

namespace pathgcn {

double grouping_cost(const GroupedCsr& grouped, std::size_t dim, const GroupCostModel& model) {
    if (model.worker_count < 1) throw ConfigError("cost model: worker count must be >= 1");
    std::vector<std::uint64_t> load(static_cast<std::size_t>(model.worker_count), 0);
    for (std::size_t i = 0; i < grouped.groups.size(); ++i) {
        const auto& g = grouped.groups[i];
        load[i % load.size()] += (g.edge_end - g.edge_begin) * dim;
    }
    std::uint64_t atomic_writes = 0;
    for (VertexId v = 0; v < grouped.base.n; ++v) {
        const std::uint64_t k = grouped.groups_of(v);
        if (k > 1) atomic_writes += (k - 1) * dim;
    }
    const std::uint64_t max_load = load.empty() ? 0 : *std::max_element(load.begin(), load.end());
    return static_cast<double>(max_load) +
           model.atomic_penalty * static_cast<double>(atomic_writes);
}

GroupingEvaluator cost_model_evaluator(std::size_t dim, GroupCostModel model) {
    return [dim, model](const GroupedCsr& grouped) { return grouping_cost(grouped, dim, model); };
}

std::vector<VertexId> default_gs_candidates(VertexId max_degree) {
    std::vector<VertexId> out{1};
    while (out.back() < std::max<VertexId>(max_degree, 1)) out.push_back(out.back() * 2);
    return out;
}

GsSweepResult oracle_gs(CsrView csr, const std::vector<VertexId>& candidates,
                        const GroupingEvaluator& evaluate) {
    if (candidates.empty()) throw ConfigError("oracle_gs: empty candidate list");
    GsSweepResult result;
    double best = 0.0;
    bool first = true;
    for (VertexId gs : candidates) {
        const GroupedCsr grouped = group_neighbors(csr, gs);
        const double cost = evaluate(grouped);
        result.table.push_back({gs, cost});
        if (first || cost < best || (cost == best && gs < result.best_gs)) {
            first = false;
            best = cost;
            result.best_gs = gs;
        }
    }
    return result;
}

}  // namespace pathgcn
