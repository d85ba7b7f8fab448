#include "pathgcn/frontier.hpp"

#include "pathgcn/error.hpp"

namespace pathgcn {

FrontierSets compute_frontiers(const CsrGraph& g, const TrainingSet& vt, std::size_t layers) {
    if (layers < 1) throw ConfigError("frontiers: layer count must be >= 1");
    if (vt.vertices.empty()) throw ConfigError("frontiers: training set is empty");

    FrontierSets out;
    out.levels.reserve(layers + 1);
    out.levels.push_back(vt.vertices);

    std::vector<std::uint8_t> mark(g.n);
    for (std::size_t k = 0; k < layers; ++k) {
        std::fill(mark.begin(), mark.end(), 0);
        for (VertexId v : out.levels[k])
            for (VertexId u : g.adj(v)) mark[u] = 1;
        std::vector<VertexId> next;
        for (VertexId v = 0; v < g.n; ++v)
            if (mark[v]) next.push_back(v);
        out.levels.push_back(std::move(next));
    }
    return out;
}

std::vector<std::uint8_t> level_bitmap(const FrontierSets& frontiers, std::size_t level,
                                       VertexId n) {
    std::vector<std::uint8_t> bits(n, 0);
    for (VertexId v : frontiers.levels[level]) bits[v] = 1;
    return bits;
}

}  // namespace pathgcn
