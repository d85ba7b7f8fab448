#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pathgcn/edge_list.hpp"
#include "pathgcn/types.hpp"

namespace pathgcn {

enum class WeightMode { Unit, SymNorm };

// Undirected weighted graph in CSR form. Each undirected edge is stored in
// both directions, neighbor lists are sorted and duplicate-free, and
// weight(u->v) == weight(v->u). Immutable once built; safe for concurrent
// readers.
struct CsrGraph {
    VertexId n = 0;
    std::vector<EdgeIndex> offsets;   // n+1
    std::vector<VertexId> neighbors;  // m (directed count)
    std::vector<double> weights;      // m

    EdgeIndex m() const { return offsets.empty() ? 0 : offsets[n]; }
    VertexId degree(VertexId v) const {
        return static_cast<VertexId>(offsets[v + 1] - offsets[v]);
    }
    VertexId max_degree() const;
    std::span<const VertexId> adj(VertexId v) const {
        return {neighbors.data() + offsets[v], offsets[v + 1] - offsets[v]};
    }
    CsrView view() const {
        return {n, offsets, neighbors, weights};
    }
    // FNV-1a over the topology; used to detect stale execution paths.
    std::uint64_t fingerprint() const;
};

struct GraphStats {
    VertexId n_vertices = 0;
    EdgeIndex n_undirected_edges = 0;
    double avg_degree = 0.0;  // n_undirected_edges / n_vertices
};

// Symmetrizes, deduplicates and sorts. Self-loop pairs are skipped. n is
// 1 + max id, or n_hint when larger. Weights are left unset (zero-filled).
CsrGraph build_undirected_csr(const EdgeList& edges);

// Unit: all 1.0. SymNorm: weight(u->v) = 1/sqrt(deg(u)*deg(v)).
void assign_edge_weights(CsrGraph& g, WeightMode mode);

GraphStats graph_stats(const CsrGraph& g);

// Debug dump: "n m" header, then one "v: u1 u2 ..." line per vertex.
void dump_csr(std::ostream& out, const CsrGraph& g);
CsrGraph parse_csr_dump(std::istream& in);

// All (u,v) with u < v, in ascending order.
std::vector<std::pair<VertexId, VertexId>> undirected_edge_set(const CsrGraph& g);

}  // namespace pathgcn
