#include "pathgcn/csr_graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "pathgcn/error.hpp"

namespace pathgcn {

VertexId CsrGraph::max_degree() const {
    VertexId best = 0;
    for (VertexId v = 0; v < n; ++v) best = std::max(best, degree(v));
    return best;
}

std::uint64_t CsrGraph::fingerprint() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xFF;
            h *= 1099511628211ull;
        }
    };
    mix(n);
    for (EdgeIndex o : offsets) mix(o);
    for (VertexId u : neighbors) mix(u);
    return h;
}

CsrGraph build_undirected_csr(const EdgeList& edges) {
    VertexId n = edges.n_hint.value_or(0);
    bool any = false;
    for (const auto& [u, v] : edges.pairs) {
        if (u == v) continue;
        any = true;
        n = std::max(n, std::max(u, v) + 1);
    }
    if (!any && !edges.n_hint)
        throw ConfigError("cannot build a graph from an empty edge list without a vertex-count hint");

    std::vector<std::pair<VertexId, VertexId>> dir;
    dir.reserve(edges.pairs.size() * 2);
    for (const auto& [u, v] : edges.pairs) {
        if (u == v) continue;
        dir.emplace_back(u, v);
        dir.emplace_back(v, u);
    }
    std::sort(dir.begin(), dir.end());
    dir.erase(std::unique(dir.begin(), dir.end()), dir.end());

    CsrGraph g;
    g.n = n;
    g.offsets.assign(n + 1, 0);
    for (const auto& [u, v] : dir) g.offsets[u + 1]++;
    for (VertexId v = 0; v < n; ++v) g.offsets[v + 1] += g.offsets[v];
    g.neighbors.resize(dir.size());
    for (std::size_t i = 0; i < dir.size(); ++i) g.neighbors[i] = dir[i].second;
    g.weights.assign(dir.size(), 0.0);
    return g;
}

void assign_edge_weights(CsrGraph& g, WeightMode mode) {
    if (mode == WeightMode::Unit) {
        std::fill(g.weights.begin(), g.weights.end(), 1.0);
        return;
    }
    for (VertexId u = 0; u < g.n; ++u) {
        const double du = static_cast<double>(g.degree(u));
        for (EdgeIndex e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
            const double dv = static_cast<double>(g.degree(g.neighbors[e]));
            g.weights[e] = 1.0 / std::sqrt(du * dv);
        }
    }
}

GraphStats graph_stats(const CsrGraph& g) {
    GraphStats s;
    s.n_vertices = g.n;
    s.n_undirected_edges = g.m() / 2;
    s.avg_degree = g.n == 0 ? 0.0
                            : static_cast<double>(s.n_undirected_edges) / static_cast<double>(g.n);
    return s;
}

void dump_csr(std::ostream& out, const CsrGraph& g) {
    out << g.n << ' ' << g.m() << '\n';
    for (VertexId v = 0; v < g.n; ++v) {
        out << v << ':';
        for (VertexId u : g.adj(v)) out << ' ' << u;
        out << '\n';
    }
}

CsrGraph parse_csr_dump(std::istream& in) {
    VertexId n = 0;
    EdgeIndex m = 0;
    if (!(in >> n >> m)) throw ParseError("bad CSR dump header", 1);
    EdgeList el;
    el.n_hint = n;
    std::string tok;
    for (VertexId v = 0; v < n; ++v) {
        if (!(in >> tok)) throw ParseError("truncated CSR dump", v + 2);
        // vertex label "v:"
        std::string line;
        std::getline(in, line);
        std::istringstream row(line);
        VertexId u;
        while (row >> u)
            if (v < u) el.pairs.emplace_back(v, u);
    }
    return build_undirected_csr(el);
}

std::vector<std::pair<VertexId, VertexId>> undirected_edge_set(const CsrGraph& g) {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(g.m() / 2);
    for (VertexId v = 0; v < g.n; ++v)
        for (VertexId u : g.adj(v))
            if (v < u) out.emplace_back(v, u);
    return out;
}

}  // namespace pathgcn
