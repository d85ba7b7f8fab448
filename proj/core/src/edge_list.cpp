#include "pathgcn/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "pathgcn/error.hpp"

namespace pathgcn {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

// Strict non-negative integer parse; rejects signs, empties and trailing junk.
std::optional<VertexId> parse_vertex(std::string_view tok) {
    if (tok.empty() || tok.front() == '-' || tok.front() == '+') return std::nullopt;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
    if (value > 0xFFFFFFFFull) return std::nullopt;
    return static_cast<VertexId>(value);
}

}  // namespace

EdgeList load_edge_list(std::istream& in) {
    EdgeList out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view s = trim(line);
        if (s.empty() || s.front() == '#') continue;

        std::size_t ws = s.find_first_of(" \t");
        if (ws == std::string_view::npos)
            throw ParseError("expected two vertex ids, got one token", line_no);
        std::string_view a = s.substr(0, ws);
        std::string_view rest = trim(s.substr(ws));
        if (rest.find_first_of(" \t") != std::string_view::npos)
            throw ParseError("expected two vertex ids, got extra tokens", line_no);

        auto src = parse_vertex(a);
        auto dst = parse_vertex(rest);
        if (!src || !dst)
            throw ParseError("vertex id is not a non-negative integer", line_no);
        if (*src == *dst) {
            ++out.self_loops_dropped;
            continue;
        }
        out.pairs.emplace_back(*src, *dst);
    }
    return out;
}

EdgeList load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open edge list: " + path);
    return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const EdgeList& edges) {
    for (const auto& [u, v] : edges.pairs)
        out << u << ' ' << v << '\n';
}

}  // namespace pathgcn
