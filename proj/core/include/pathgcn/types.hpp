#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace pathgcn {

using VertexId = std::uint32_t;
using EdgeIndex = std::uint64_t;

// Non-owning view of a CSR adjacency structure. Both the full graph and the
// per-layer execution paths expose this shape, so grouping and aggregation
// work on either.
struct CsrView {
    VertexId n = 0;  // number of destination vertices
    std::span<const EdgeIndex> offsets;   // n+1
    std::span<const VertexId> neighbors;  // offsets[n]
    std::span<const double> weights;      // offsets[n]

    EdgeIndex edge_count() const { return offsets.empty() ? 0 : offsets[n]; }
    VertexId degree(VertexId v) const {
        return static_cast<VertexId>(offsets[v + 1] - offsets[v]);
    }
};

}  // namespace pathgcn
