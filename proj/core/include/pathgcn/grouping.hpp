#pragma once

#include <cstdint>
#include <vector>

#include "pathgcn/types.hpp"

namespace pathgcn {

// Neighbor lists split into chunks of at most gs edges. Each group is an
// independent scheduling unit; groups of one vertex are contiguous and cover
// its neighbor range exactly once. Holds a view into the base CSR, which
// must outlive the grouping.
struct GroupedCsr {
    struct Group {
        VertexId dest;
        EdgeIndex edge_begin;
        EdgeIndex edge_end;
    };

    CsrView base;
    VertexId gs = 0;
    std::vector<Group> groups;               // ascending (dest, edge_begin)
    std::vector<std::uint64_t> dest_groups;  // n+1; groups of v are [dest_groups[v], dest_groups[v+1])

    std::size_t group_count() const { return groups.size(); }
    std::uint64_t groups_of(VertexId v) const { return dest_groups[v + 1] - dest_groups[v]; }
};

GroupedCsr group_neighbors(CsrView csr, VertexId gs);

}  // namespace pathgcn
