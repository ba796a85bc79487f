#include <doctest.h>

#include <random>

#include "flowpoly/io.hpp"
#include "flowpoly/multigraph.hpp"
#include "flowpoly/verify.hpp"

using namespace flowpoly;

namespace {

// The running example graph: E = {(0,1),(0,2),(1,2),(2,3),(2,4),(3,4)} on [0,4].
MultiGraph example_graph() {
    return MultiGraph::from_rows(4, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 3, 1}, {2, 4, 1}, {3, 4, 1}});
}

MultiGraph path3() { return MultiGraph::from_rows(2, {{0, 1, 1}, {1, 2, 1}}); }

}  // namespace

TEST_CASE("indegree") {
    CHECK(path3().indeg(1) == 1);
    CHECK(example_graph().indeg(2) == 2);
    MultiGraph doubled = MultiGraph::from_rows(1, {{0, 1, 2}});
    CHECK(doubled.indeg(1) == 2);
}

TEST_CASE("outdegree of a vertex set") {
    CHECK(path3().outdeg_set({2}) == 0);
    CHECK(path3().outdeg_set({1}) == 1);
    CHECK(example_graph().outdeg_set({3, 4}) == 0);
}

TEST_CASE("degree sums count edges") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        MultiGraph g = random_multigraph(rng, 4, 8);
        int in = 0, out = 0;
        for (int v = 0; v <= g.n(); ++v) {
            in += g.indeg(v);
            out += g.outdeg(v);
        }
        CHECK(in == g.edge_count());
        CHECK(out == g.edge_count());
    }
}

TEST_CASE("outdeg-zero sets are closed under union") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        MultiGraph g = random_multigraph(rng, 3, 6);
        const int nv = g.vertex_count();
        for (uint32_t a = 0; a < (1u << nv); ++a)
            for (uint32_t b = 0; b < (1u << nv); ++b) {
                VertexSet sa, sb, su;
                for (int v = 0; v < nv; ++v) {
                    if (a >> v & 1) sa.insert(v), su.insert(v);
                    if (b >> v & 1) sb.insert(v), su.insert(v);
                }
                if (g.outdeg_set(sa) == 0 && g.outdeg_set(sb) == 0) CHECK(g.outdeg_set(su) == 0);
            }
    }
}

TEST_CASE("tilde adds a source and sink") {
    MultiGraph single(0);
    MultiGraph t0 = single.tilde();
    CHECK(t0.n() == 2);
    CHECK(t0.edges() == std::vector<Edge>{{0, 1, 1}, {1, 2, 1}});

    MultiGraph e1 = MultiGraph::from_rows(1, {{0, 1, 1}});
    MultiGraph t1 = e1.tilde();
    CHECK(t1.edge_count() == 5);
    CHECK(t1.has_edge({1, 2, 1}));  // the original edge, shifted
    CHECK(t1.has_edge({0, 1, 1}));
    CHECK(t1.has_edge({0, 2, 1}));
    CHECK(t1.has_edge({1, 3, 1}));
    CHECK(t1.has_edge({2, 3, 1}));

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        MultiGraph g = random_multigraph(rng, 4, 6);
        CHECK(g.tilde().edge_count() == g.edge_count() + 2 * (g.n() + 1));
    }
}

TEST_CASE("contraction, mirror, restriction") {
    MultiGraph contracted = path3().contract_edge({0, 1, 1});
    CHECK(contracted.n() == 1);
    CHECK(contracted.edges() == std::vector<Edge>{{0, 1, 1}});

    // Path 1->2->3 on [n+1] = [3] is stored 0-based as 0->1->2.
    CHECK(path3().mirror() == path3());
    CHECK(example_graph().restrict(2) ==
          MultiGraph::from_rows(2, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}}));
    CHECK(example_graph().restrict(4) == example_graph());

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        MultiGraph g = random_multigraph(rng, 4, 7);
        CHECK(g.mirror().mirror() == g);
        CHECK(g.restrict(g.n()) == g);
    }
}

TEST_CASE("increasing reach") {
    CHECK(path3().increasing_reach(1) == VertexSet{1, 2});
    CHECK(path3().increasing_reach(2) == VertexSet{2});
    CHECK(example_graph().increasing_reach(2) == VertexSet{2, 3, 4});
}

TEST_CASE("vertex deletion relabels contiguously") {
    MultiGraph g = example_graph().delete_vertices({0});
    CHECK(g.n() == 3);
    CHECK(g == MultiGraph::from_rows(3, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}}));
    CHECK(example_graph().delete_vertices({2}) ==
          MultiGraph::from_rows(3, {{0, 1, 1}, {2, 3, 1}}));
    CHECK_THROWS_AS(example_graph().delete_vertices({7}), std::invalid_argument);
}

TEST_CASE("unknown vertices and edges are rejected") {
    CHECK_THROWS_AS(path3().indeg(5), std::invalid_argument);
    CHECK_THROWS_AS(path3().contract_edge({0, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(MultiGraph(1, {{{1, 0, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(MultiGraph(1, {{{0, 1, 1}, {0, 1, 1}}}), std::invalid_argument);
}

TEST_CASE("graph text and json round-trip") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        MultiGraph g = random_multigraph(rng, 4, 8);
        CHECK(parse_graph_text(graph_to_text(g)) == g);
        CHECK(graph_from_json(graph_to_json(g)) == g);
    }
    MultiGraph g = parse_graph_text("2\n0 1\n1 2\n");
    CHECK(g == path3());
}

TEST_CASE("tilde_minus_s0 keeps the terminal edges addressable") {
    TildeMinusS0 ts = tilde_minus_s0(path3());
    CHECK(ts.graph.n() == 2);
    CHECK(ts.graph.edge_count() == 3);  // (1,2) shifted plus two terminal edges
    CHECK(ts.graph.has_edge({0, 1, 1}));
    CHECK(ts.graph.edges()[ts.terminal_edges[0]] == Edge{0, 2, 1});
    CHECK(ts.graph.edges()[ts.terminal_edges[1]] == Edge{1, 2, 1});
}
