#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "pathgcn/types.hpp"

namespace pathgcn {

struct EdgeList {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::optional<VertexId> n_hint;
    std::uint64_t self_loops_dropped = 0;
};

// Parses "src dst" lines; '#' comments and blank lines are skipped.
// Self-loop pairs are dropped and counted. Malformed lines raise ParseError
// carrying the 1-based line number.
EdgeList load_edge_list(std::istream& in);
EdgeList load_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const EdgeList& edges);

}  // namespace pathgcn
