#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "pathgcn/frontier.hpp"

namespace pathgcn {

// Per-layer backward sub-graph in pull form: destinations are the frontier
// N^{L-l}, and each destination keeps only the neighbors that fall in
// N^{L-l-1}. The local CSR indexes sources through src_local_to_global;
// src_pos_in_parent locates each source inside the parent frontier array so
// compact gradient matrices can be gathered layer to layer.
struct ExecutionPath {
    std::size_t layer = 0;  // l
    std::vector<VertexId> dest_local_to_global;  // == frontier level L-l
    std::vector<VertexId> src_local_to_global;   // referenced sources, sorted
    std::vector<VertexId> src_pos_in_parent;     // index into frontier level L-l-1
    std::vector<EdgeIndex> offsets;              // |D|+1
    std::vector<VertexId> neighbors;             // local source ids
    std::vector<double> weights;                 // copied from the parent graph

    std::uint64_t fingerprint = 0;  // graph+vt+L stamp, see path_fingerprint

    VertexId dest_count() const { return static_cast<VertexId>(dest_local_to_global.size()); }
    VertexId src_count() const { return static_cast<VertexId>(src_local_to_global.size()); }
    EdgeIndex edge_count() const { return offsets.empty() ? 0 : offsets.back(); }
    CsrView view() const { return {dest_count(), offsets, neighbors, weights}; }

    std::uint64_t bytes() const;
};

std::uint64_t path_fingerprint(const CsrGraph& g, const TrainingSet& vt, std::size_t layers);

ExecutionPath extract_execution_path(const CsrGraph& g, const FrontierSets& frontiers,
                                     std::size_t layer);

// Paths for l = L-1 down to 0, in that order.
std::vector<ExecutionPath> prepare_all_paths(const CsrGraph& g, const FrontierSets& frontiers);

struct TrainingShapes {
    std::size_t f = 0;
    std::vector<std::size_t> dims;  // dim_0 .. dim_{L-1}, last one = c
};

struct FootprintReport {
    std::uint64_t baseline_bytes = 0;
    std::uint64_t epp_bytes = 0;
    double ratio = 1.0;
};

// Analytic byte accounting: baseline covers the parent CSR plus the dense
// training matrices (X, Y, all gradients, weight matrices with their Adam
// moments, and R); epp adds the stored path structures.
FootprintReport path_footprint_bytes(const std::vector<ExecutionPath>& paths, const CsrGraph& g,
                                     const TrainingShapes& shapes, std::size_t real_bytes = 8);

// Debug dump: "layer l: |D| dests, |S| srcs, E edges" then one line per
// destination listing global source ids.
void dump_path(std::ostream& out, const ExecutionPath& path);

}  // namespace pathgcn
