#pragma once

#include <cstdint>

#include "pathgcn/edge_list.hpp"

namespace pathgcn {

struct RmatParams {
    VertexId n = 0;       // rounded up to the next power of two internally
    std::uint64_t m = 0;  // number of raw pairs to draw
    double a = 0.57, b = 0.19, c = 0.19, d = 0.05;
    std::uint64_t seed = 0;
};

// Recursive-quadrant generator. Emits exactly m raw pairs (self loops and
// duplicates included); deterministic for fixed parameters. The returned
// list carries n_hint = padded vertex count.
EdgeList gen_rmat(const RmatParams& p);

}  // namespace pathgcn
