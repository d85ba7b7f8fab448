#include "pathgcn/grouping.hpp"

#include "pathgcn/error.hpp"

namespace pathgcn {

GroupedCsr group_neighbors(CsrView csr, VertexId gs) {
    if (gs == 0) throw ConfigError("group size must be at least 1");

    GroupedCsr out;
    out.base = csr;
    out.gs = gs;
    out.dest_groups.assign(csr.n + 1, 0);

    std::size_t total = 0;
    for (VertexId v = 0; v < csr.n; ++v) {
        const VertexId deg = csr.degree(v);
        total += (deg + gs - 1) / gs;
        out.dest_groups[v + 1] = total;
    }
    out.groups.reserve(total);
    for (VertexId v = 0; v < csr.n; ++v) {
        for (EdgeIndex e = csr.offsets[v]; e < csr.offsets[v + 1]; e += gs)
            out.groups.push_back({v, e, std::min<EdgeIndex>(e + gs, csr.offsets[v + 1])});
    }
    return out;
}

}  // namespace pathgcn
