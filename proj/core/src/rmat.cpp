#include "pathgcn/rmat.hpp"

#include <cmath>
#include <random>

#include "pathgcn/error.hpp"

namespace pathgcn {

EdgeList gen_rmat(const RmatParams& p) {
    if (p.n == 0) throw ConfigError("rmat: vertex count must be positive");
    const double sum = p.a + p.b + p.c + p.d;
    if (std::abs(sum - 1.0) > 1e-9)
        throw ConfigError("rmat: quadrant probabilities must sum to 1");

    int levels = 0;
    while ((VertexId{1} << levels) < p.n) ++levels;
    const VertexId n_pad = VertexId{1} << levels;

    std::mt19937_64 rng(p.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    EdgeList out;
    out.n_hint = n_pad;
    out.pairs.reserve(p.m);
    for (std::uint64_t i = 0; i < p.m; ++i) {
        VertexId src = 0, dst = 0;
        for (int lvl = levels - 1; lvl >= 0; --lvl) {
            const double r = unit(rng);
            if (r < p.a) {
                // top-left: both low
            } else if (r < p.a + p.b) {
                dst |= VertexId{1} << lvl;
            } else if (r < p.a + p.b + p.c) {
                src |= VertexId{1} << lvl;
            } else {
                src |= VertexId{1} << lvl;
                dst |= VertexId{1} << lvl;
            }
        }
        out.pairs.emplace_back(src, dst);
    }
    return out;
}

}  // namespace pathgcn
