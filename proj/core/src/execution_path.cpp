#include "pathgcn/execution_path.hpp"

#include <algorithm>
#include <ostream>

#include "pathgcn/error.hpp"

namespace pathgcn {

std::uint64_t ExecutionPath::bytes() const {
    return offsets.size() * sizeof(EdgeIndex) + neighbors.size() * sizeof(VertexId) +
           weights.size() * sizeof(double) + dest_local_to_global.size() * sizeof(VertexId) +
           src_local_to_global.size() * sizeof(VertexId) +
           src_pos_in_parent.size() * sizeof(VertexId);
}

std::uint64_t path_fingerprint(const CsrGraph& g, const TrainingSet& vt, std::size_t layers) {
    std::uint64_t h = g.fingerprint();
    h ^= vt.fingerprint() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= layers + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

ExecutionPath extract_execution_path(const CsrGraph& g, const FrontierSets& frontiers,
                                     std::size_t layer) {
    const std::size_t L = frontiers.depth();
    if (layer >= L) throw ConfigError("execution path: layer index out of range");

    const std::vector<VertexId>& dests = frontiers.levels[L - layer];
    const std::vector<VertexId>& parent = frontiers.levels[L - layer - 1];
    std::vector<std::uint8_t> in_parent(g.n, 0);
    for (VertexId v : parent) in_parent[v] = 1;

    ExecutionPath path;
    path.layer = layer;
    path.dest_local_to_global = dests;
    path.offsets.assign(dests.size() + 1, 0);

    // filtered degrees, then prefix sums
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(dests.size()); ++i) {
        EdgeIndex kept = 0;
        for (VertexId u : g.adj(dests[i]))
            if (in_parent[u]) ++kept;
        path.offsets[i + 1] = kept;
    }
    for (std::size_t i = 0; i < dests.size(); ++i) path.offsets[i + 1] += path.offsets[i];

    const EdgeIndex edges = path.offsets.back();
    std::vector<VertexId> global_src(edges);
    path.weights.resize(edges);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(dests.size()); ++i) {
        EdgeIndex w = path.offsets[i];
        const VertexId v = dests[i];
        for (EdgeIndex e = g.offsets[v]; e < g.offsets[v + 1]; ++e) {
            const VertexId u = g.neighbors[e];
            if (!in_parent[u]) continue;
            global_src[w] = u;
            path.weights[w] = g.weights[e];
            ++w;
        }
    }

    // compact the referenced sources
    path.src_local_to_global = global_src;
    std::sort(path.src_local_to_global.begin(), path.src_local_to_global.end());
    path.src_local_to_global.erase(
        std::unique(path.src_local_to_global.begin(), path.src_local_to_global.end()),
        path.src_local_to_global.end());

    path.neighbors.resize(edges);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t e = 0; e < static_cast<std::ptrdiff_t>(edges); ++e) {
        const auto it = std::lower_bound(path.src_local_to_global.begin(),
                                         path.src_local_to_global.end(), global_src[e]);
        path.neighbors[e] =
            static_cast<VertexId>(it - path.src_local_to_global.begin());
    }

    path.src_pos_in_parent.resize(path.src_local_to_global.size());
    for (std::size_t s = 0; s < path.src_local_to_global.size(); ++s) {
        const auto it =
            std::lower_bound(parent.begin(), parent.end(), path.src_local_to_global[s]);
        path.src_pos_in_parent[s] = static_cast<VertexId>(it - parent.begin());
    }
    return path;
}

std::vector<ExecutionPath> prepare_all_paths(const CsrGraph& g, const FrontierSets& frontiers) {
    const std::size_t L = frontiers.depth();
    std::vector<ExecutionPath> paths;
    paths.reserve(L);
    for (std::size_t l = L; l-- > 0;) paths.push_back(extract_execution_path(g, frontiers, l));
    return paths;
}

FootprintReport path_footprint_bytes(const std::vector<ExecutionPath>& paths, const CsrGraph& g,
                                     const TrainingShapes& shapes, std::size_t real_bytes) {
    const std::uint64_t n = g.n;
    const std::size_t L = shapes.dims.size();
    auto mat = [&](std::uint64_t rows, std::uint64_t cols) { return rows * cols * real_bytes; };

    std::uint64_t baseline = (n + 1) * sizeof(EdgeIndex) + g.m() * sizeof(VertexId) +
                             g.m() * sizeof(double);
    // X^0..X^L and the matching gradients
    std::uint64_t x_cols = shapes.f;
    baseline += 2 * mat(n, x_cols);
    for (std::size_t l = 0; l < L; ++l) baseline += 2 * mat(n, shapes.dims[l]);
    // Y^0..Y^{L-1} (shaped like X^l) and their gradients
    baseline += 2 * mat(n, shapes.f);
    for (std::size_t l = 0; l + 1 < L; ++l) baseline += 2 * mat(n, shapes.dims[l]);
    // W, W', two Adam moments
    std::uint64_t w_elems = 0;
    std::uint64_t in_dim = shapes.f;
    for (std::size_t l = 0; l < L; ++l) {
        w_elems += in_dim * shapes.dims[l];
        in_dim = shapes.dims[l];
    }
    baseline += 4 * w_elems * real_bytes;
    // R
    baseline += mat(n, shapes.dims.empty() ? 0 : shapes.dims.back());

    std::uint64_t epp = baseline;
    for (const ExecutionPath& p : paths) epp += p.bytes();

    FootprintReport report;
    report.baseline_bytes = baseline;
    report.epp_bytes = epp;
    report.ratio = static_cast<double>(epp) / static_cast<double>(baseline);
    return report;
}

void dump_path(std::ostream& out, const ExecutionPath& path) {
    out << "layer " << path.layer << ": " << path.dest_count() << " dests, " << path.src_count()
        << " srcs, " << path.edge_count() << " edges\n";
    for (VertexId d = 0; d < path.dest_count(); ++d) {
        out << path.dest_local_to_global[d] << ':';
        for (EdgeIndex e = path.offsets[d]; e < path.offsets[d + 1]; ++e)
            out << ' ' << path.src_local_to_global[path.neighbors[e]];
        out << '\n';
    }
}

}  // namespace pathgcn
