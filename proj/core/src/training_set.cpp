#include "pathgcn/training_set.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>

#include "pathgcn/error.hpp"

namespace pathgcn {

std::uint64_t TrainingSet::fingerprint() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xFF;
            h *= 1099511628211ull;
        }
    };
    mix(vertices.size());
    for (VertexId v : vertices) mix(v);
    return h;
}

TrainingSet sample_training_set(VertexId n, double ratio, std::uint64_t seed) {
    if (n == 0) throw ConfigError("training set: graph has no vertices");
    if (!(ratio > 0.0) || ratio > 1.0)
        throw ConfigError("training ratio must be in (0, 1]");

    const std::size_t k = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(ratio * static_cast<double>(n))));

    std::vector<VertexId> ids(n);
    std::iota(ids.begin(), ids.end(), VertexId{0});
    std::mt19937_64 rng(seed);
    // partial Fisher-Yates: only the first k positions are needed
    for (std::size_t i = 0; i < k; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n - 1);
        std::swap(ids[i], ids[pick(rng)]);
    }
    TrainingSet vt;
    vt.ratio = ratio;
    vt.vertices.assign(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(vt.vertices.begin(), vt.vertices.end());
    return vt;
}

TrainingSet load_training_set(std::istream& in, VertexId n) {
    TrainingSet vt;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        try {
            const long long v = std::stoll(line);
            if (v < 0 || static_cast<std::uint64_t>(v) >= n)
                throw ConfigError("training vertex " + std::to_string(v) + " out of range");
            vt.vertices.push_back(static_cast<VertexId>(v));
        } catch (const std::invalid_argument&) {
            throw ParseError("bad training-set line", line_no);
        }
    }
    std::sort(vt.vertices.begin(), vt.vertices.end());
    vt.vertices.erase(std::unique(vt.vertices.begin(), vt.vertices.end()), vt.vertices.end());
    if (vt.vertices.empty()) throw ConfigError("training set is empty");
    vt.ratio = static_cast<double>(vt.vertices.size()) / static_cast<double>(n);
    return vt;
}

TrainingSet load_training_set_file(const std::string& path, VertexId n) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open training set: " + path);
    return load_training_set(in, n);
}

void write_training_set(std::ostream& out, const TrainingSet& vt) {
    for (VertexId v : vt.vertices) out << v << '\n';
}

}  // namespace pathgcn
