#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pathgcn/types.hpp"

namespace pathgcn {

struct TrainingSet {
    std::vector<VertexId> vertices;  // sorted, unique
    double ratio = 0.0;

    std::size_t size() const { return vertices.size(); }
    std::uint64_t fingerprint() const;
};

// Uniform sample without replacement of size max(1, round(ratio*n));
// deterministic per seed, sorted output.
TrainingSet sample_training_set(VertexId n, double ratio, std::uint64_t seed);

// One vertex id per line; '#' comments and blanks tolerated.
TrainingSet load_training_set(std::istream& in, VertexId n);
TrainingSet load_training_set_file(const std::string& path, VertexId n);
void write_training_set(std::ostream& out, const TrainingSet& vt);

}  // namespace pathgcn
