#pragma once

#include <vector>

#include "pathgcn/csr_graph.hpp"
#include "pathgcn/training_set.hpp"

namespace pathgcn {

// levels[k] is the set of vertices reachable from the training set by a walk
// of exactly k edges; levels[0] is the training set itself. Walk semantics:
// levels[k+1] is the union of the neighbor sets of levels[k], which on
// bipartite graphs differs from BFS distance levels.
struct FrontierSets {
    std::vector<std::vector<VertexId>> levels;  // L+1 sorted id arrays

    std::size_t depth() const { return levels.empty() ? 0 : levels.size() - 1; }
};

FrontierSets compute_frontiers(const CsrGraph& g, const TrainingSet& vt, std::size_t layers);

// Membership bitmap for one level.
std::vector<std::uint8_t> level_bitmap(const FrontierSets& frontiers, std::size_t level,
                                       VertexId n);

}  // namespace pathgcn
