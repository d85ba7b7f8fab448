#include <set>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "pathgcn/error.hpp"

using namespace pathgcn;

TEST_CASE("canonical graph has the reconstructed degrees") {
    const CsrGraph g = fixtures::gex();
    REQUIRE(g.n == 5);
    CHECK(g.m() == 12);
    const std::vector<VertexId> expect = {1, 4, 2, 3, 2};
    for (VertexId v = 0; v < 5; ++v) CHECK(g.degree(v) == expect[v]);
}

TEST_CASE("duplicate pairs and reverse orientations collapse to one edge") {
    EdgeList el;
    el.pairs = {{0, 1}, {1, 0}, {0, 1}};
    const CsrGraph g = build_undirected_csr(el);
    CHECK(g.n == 2);
    CHECK(g.m() == 2);
}

TEST_CASE("n_hint creates isolated vertices") {
    EdgeList el;
    el.pairs = {{0, 2}};
    el.n_hint = 5;
    const CsrGraph g = build_undirected_csr(el);
    CHECK(g.n == 5);
    CHECK(g.degree(1) == 0);
    CHECK(g.degree(3) == 0);
    CHECK(g.degree(4) == 0);
}

TEST_CASE("empty edge list without a hint is an error") {
    EdgeList el;
    CHECK_THROWS_AS(build_undirected_csr(el), ConfigError);
    el.n_hint = 3;
    const CsrGraph g = build_undirected_csr(el);
    CHECK(g.n == 3);
    CHECK(g.m() == 0);
}

TEST_CASE("symmetry: both orientations reconstruct the same edge set") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const CsrGraph g = fixtures::random_graph(64, 256, seed);
        std::set<std::pair<VertexId, VertexId>> fwd, bwd;
        for (VertexId v = 0; v < g.n; ++v)
            for (VertexId u : g.adj(v)) {
                fwd.insert({std::min(u, v), std::max(u, v)});
                bwd.insert({std::max(u, v), std::min(u, v)});
            }
        CHECK(fwd.size() == bwd.size());
        CHECK(fwd.size() == g.m() / 2);
        // every u in adj(v) has v in adj(u)
        for (VertexId v = 0; v < g.n; ++v)
            for (VertexId u : g.adj(v)) {
                const auto nb = g.adj(u);
                CHECK(std::binary_search(nb.begin(), nb.end(), v));
            }
    }
}

TEST_CASE("neighbor lists are sorted and duplicate free") {
    const CsrGraph g = fixtures::rmat_graph(256, 2048, 5);
    for (VertexId v = 0; v < g.n; ++v) {
        const auto nb = g.adj(v);
        for (std::size_t i = 1; i < nb.size(); ++i) CHECK(nb[i - 1] < nb[i]);
    }
}

TEST_CASE("unit weights are all one") {
    const CsrGraph g = fixtures::gex(WeightMode::Unit);
    for (double w : g.weights) CHECK(w == 1.0);
}

TEST_CASE("sym-norm weight of the (v3,v2) edge") {
    CsrGraph g = fixtures::gex();
    assign_edge_weights(g, WeightMode::SymNorm);
    // v3 is id 2 (degree 2), v2 is id 1 (degree 4)
    const auto nb = g.adj(2);
    const auto it = std::find(nb.begin(), nb.end(), VertexId{1});
    REQUIRE(it != nb.end());
    const double w = g.weights[g.offsets[2] + (it - nb.begin())];
    CHECK(w == doctest::Approx(0.3535534).epsilon(1e-6));
}

TEST_CASE("sym-norm spoke weight of a 3-leaf star") {
    CsrGraph g = fixtures::star(3);
    assign_edge_weights(g, WeightMode::SymNorm);
    CHECK(g.weights[g.offsets[0]] == doctest::Approx(0.5773503).epsilon(1e-6));
}

TEST_CASE("sym-norm weights are exactly symmetric") {
    CsrGraph g = fixtures::rmat_graph(128, 512, 9);
    assign_edge_weights(g, WeightMode::SymNorm);
    for (VertexId v = 0; v < g.n; ++v)
        for (EdgeIndex e = g.offsets[v]; e < g.offsets[v + 1]; ++e) {
            const VertexId u = g.neighbors[e];
            const auto nb = g.adj(u);
            const auto it = std::lower_bound(nb.begin(), nb.end(), v);
            const double back = g.weights[g.offsets[u] + (it - nb.begin())];
            CHECK(g.weights[e] == back);
        }
}

TEST_CASE("graph stats follow the undirected convention") {
    const GraphStats s = graph_stats(fixtures::gex());
    CHECK(s.n_vertices == 5);
    CHECK(s.n_undirected_edges == 6);
    CHECK(s.avg_degree == doctest::Approx(1.2));

    EdgeList el;
    el.pairs = {{0, 1}};
    const GraphStats single = graph_stats(build_undirected_csr(el));
    CHECK(single.n_vertices == 2);
    CHECK(single.n_undirected_edges == 1);
    CHECK(single.avg_degree == doctest::Approx(0.5));
}

TEST_CASE("cora-shaped stats give the published average degree") {
    GraphStats s;
    s.n_vertices = 2708;
    s.n_undirected_edges = 5278;
    s.avg_degree = 5278.0 / 2708.0;
    CHECK(s.avg_degree == doctest::Approx(1.949).epsilon(1e-3));
}

TEST_CASE("rebuilding from the CSR's own edge dump is bit identical") {
    const CsrGraph g = fixtures::rmat_graph(128, 1024, 11);
    std::ostringstream dump;
    dump_csr(dump, g);
    std::istringstream in(dump.str());
    const CsrGraph rebuilt = parse_csr_dump(in);
    CHECK(rebuilt.n == g.n);
    CHECK(rebuilt.offsets == g.offsets);
    CHECK(rebuilt.neighbors == g.neighbors);
}

TEST_CASE("fingerprint distinguishes topologies") {
    const CsrGraph a = fixtures::gex();
    const CsrGraph b = fixtures::star(4);
    CHECK(a.fingerprint() != b.fingerprint());
    CHECK(a.fingerprint() == fixtures::gex().fingerprint());
}
