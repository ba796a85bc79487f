#include <doctest.h>

#include <random>

#include "flowpoly/arrays.hpp"
#include "flowpoly/flows.hpp"
#include "flowpoly/verify.hpp"

using namespace flowpoly;

namespace {

MultiGraph example_graph() {
    return MultiGraph::from_rows(4, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 3, 1}, {2, 4, 1}, {3, 4, 1}});
}

// E = {(0,1),(0,1),(0,2),(1,2),(1,2),(2,3),(2,4),(3,4),(3,4)} on [0,4].
MultiGraph multi_example() {
    return MultiGraph::from_rows(4, {{0, 1, 2}, {0, 2, 1}, {1, 2, 2}, {2, 3, 1}, {2, 4, 1}, {3, 4, 2}});
}

MultiGraph path3() { return MultiGraph::from_rows(2, {{0, 1, 1}, {1, 2, 1}}); }

}  // namespace

TEST_CASE("plain triangular array of the example graph") {
    std::string expected =
        "0 <= a_{4,1} = a_{3,1} = a_{2,1} <= a_{1,1} = 1\n"
        "0 <= a_{4,2} <= a_{3,2} <= a_{2,2} = 3 - a_{2,1}\n"
        "0 <= a_{4,3} <= a_{3,3} = 4 - a_{3,1} - a_{3,2}\n"
        "0 <= a_{4,4} = 6 - a_{4,1} - a_{4,2} - a_{4,3}";
    CHECK(render(tri_array(example_graph())) == expected);
}

TEST_CASE("F-shifted array of the example graph") {
    EdgeSubset f{{2, 3, 1}, {2, 4, 1}, {3, 4, 1}};
    std::string expected =
        "0 <= a_{4,1} = a_{3,1} = a_{2,1} <= a_{1,1} = 1\n"
        "2 <= a_{4,2}+2 <= a_{3,2}+1 <= a_{2,2} = 3 - a_{2,1}\n"
        "1 <= a_{4,3}+1 <= a_{3,3} = 3 - a_{3,1} - a_{3,2}\n"
        "0 <= a_{4,4} = 3 - a_{4,1} - a_{4,2} - a_{4,3}";
    CHECK(render(tri_array(example_graph(), f)) == expected);
}

TEST_CASE("multigraph array with chained copies") {
    std::string expected =
        "0 <= a_{4,1}^(1) = a_{3,1}^(1) = a_{2,1}^(1) <= a_{2,1}^(2) <= a_{1,1}^(1) = 2\n"
        "0 <= a_{4,2}^(1) <= a_{3,2}^(1) <= a_{2,2}^(1) = 5 - a_{2,1}^(1)\n"
        "0 <= a_{4,3}^(1) <= a_{4,3}^(2) <= a_{3,3}^(1) = 6 - a_{3,1}^(1) - a_{3,2}^(1)\n"
        "0 <= a_{4,4}^(1) = 9 - a_{4,1}^(1) - a_{4,2}^(1) - a_{4,3}^(1)";
    CHECK(render(tri_array(multi_example())) == expected);
}

TEST_CASE("multigraph array with a multiset F") {
    EdgeSubset f{{1, 2, 1}, {1, 2, 2}, {2, 3, 1}};
    std::string expected =
        "2 <= a_{4,1}^(1)+2 = a_{3,1}^(1)+2 = a_{2,1}^(1)+2 <= a_{2,1}^(2)+2 <= a_{1,1}^(1) = 2\n"
        "1 <= a_{4,2}^(1)+1 <= a_{3,2}^(1)+1 <= a_{2,2}^(1) = 3 - a_{2,1}^(1)\n"
        "0 <= a_{4,3}^(1) <= a_{4,3}^(2) <= a_{3,3}^(1) = 3 - a_{3,1}^(1) - a_{3,2}^(1)\n"
        "0 <= a_{4,4}^(1) = 6 - a_{4,1}^(1) - a_{4,2}^(1) - a_{4,3}^(1)";
    CHECK(render(tri_array(multi_example(), f)) == expected);
}

TEST_CASE("F with a tail-0 edge is rejected") {
    CHECK_THROWS_AS(tri_array(example_graph(), {{0, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(tri_array(example_graph(), {{1, 3, 1}}), std::invalid_argument);
}

TEST_CASE("solution enumeration on tiny instances") {
    // Single edge: the base equation pins a_{1,1} = 1.
    auto sols = sol_enumerate(tri_array(MultiGraph::from_rows(1, {{0, 1, 1}})));
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].at(1, 1) == 1);
    CHECK(first_column(sols[0]) == std::vector<int>{1});

    auto cols = sol_first_columns(tri_array(path3()));
    CHECK(cols == std::map<std::vector<int>, long long>{{{0, 2}, 1}, {{1, 1}, 1}});

    auto colsF = sol_first_columns(tri_array(path3(), {{1, 2, 1}}));
    CHECK(colsF == std::map<std::vector<int>, long long>{{{0, 1}, 1}});
}

TEST_CASE("row sums restate the diagonal equations") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        MultiGraph g = random_multigraph(rng, 3, 5);
        auto pool = g.edges_avoiding_zero();
        EdgeSubset f;
        for (const Edge& e : pool)
            if (rng() % 2) f.insert(e);
        ConstraintArray a = tri_array(g, f);
        for (const SolutionArray& s : sol_enumerate(a)) {
            for (int i = 1; i <= g.n(); ++i) {
                long long sum = 0;
                for (int k = 1; k <= i; ++k) sum += s.at(k, i) + a.offsets[k][i];
                CHECK(sum == a.cum_edges[i]);
            }
        }
    }
}

TEST_CASE("gr graph structure and netflow") {
    GrEncoding enc = gr_graph(example_graph());
    // Triangular grid plus sink: n(n+1)/2 + 1 vertices for a simple graph.
    CHECK(enc.graph.vertex_count() == 11);
    CHECK(enc.graph.edge_count() == 10 + 4);  // carriers + z edges
    long long total = 0;
    for (long long v : enc.netflow) total += v;
    CHECK(total == 0);
    CHECK(enc.netflow.back() == -example_graph().edge_count());

    // With F the last entry becomes -#E(G\F).
    GrEncoding encF = gr_graph(example_graph(), {{2, 3, 1}});
    CHECK(encF.netflow.back() == -5);
}

TEST_CASE("encoding chain on the worked examples") {
    CHECK(verify_encoding_chain(path3(), {}).ok);
    CHECK(verify_encoding_chain(path3(), {{1, 2, 1}}).ok);
    CHECK(verify_encoding_chain(example_graph(), {}).ok);
    CHECK(verify_encoding_chain(example_graph(), {{2, 3, 1}}).ok);
    CHECK(verify_encoding_chain_all(multi_example().restrict(2)).ok);
    CHECK(verify_encoding_chain_all(MultiGraph::from_rows(3, {{0, 1, 2}, {1, 2, 1}, {1, 3, 1}, {2, 3, 2}})).ok);
}

TEST_CASE("b vector") {
    CHECK(b_vector(path3()) == Netflow{1, 1, -2});
    CHECK(b_vector(path3(), {{1, 2, 1}}) == Netflow{0, 1, -1});
    CHECK(b_vector(example_graph(), {{2, 3, 1}, {2, 4, 1}, {3, 4, 1}}) == Netflow{1, 0, 0, 2, -3});
}

TEST_CASE("augmented graph shape") {
    AugEncoding enc = aug_graph(example_graph());
    CHECK(enc.y_edges.size() == example_graph().edges_avoiding_zero().size());
    CHECK(enc.b_empty == b_vector(example_graph()));
    CHECK(enc.graph.vertex_count() == 5);  // [4] plus t

    LevelEncoding lv = level_graph(example_graph(), 0);
    CHECK(lv.b_k[lv.b_k.size() - 2] == 0);
    CHECK(lv.b_k.back() == -example_graph().edge_count());
    CHECK_THROWS_AS(level_graph(example_graph(), -1), std::invalid_argument);
}

TEST_CASE("level flows match augmented flows with k unit y edges") {
    MultiGraph tri = MultiGraph::from_rows(2, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    AugEncoding aug = aug_graph(tri);
    for (long long k = 0; k <= 2; ++k) {
        LevelEncoding lv = level_graph(tri, k);
        std::map<std::vector<int>, long long> from_level;
        for_each_flow(lv.graph, lv.b_k, lv.caps, [&](const std::vector<long long>& f) {
            std::vector<int> img;
            for (size_t e : lv.a_edges) img.push_back(static_cast<int>(f[e]));
            ++from_level[img];
        });
        std::map<std::vector<int>, long long> from_aug;
        for_each_flow(aug.graph, aug.b_empty, aug.caps, [&](const std::vector<long long>& f) {
            long long ones = 0;
            for (size_t e : aug.y_edges) ones += f[e];
            if (ones != k) return;
            std::vector<int> img;
            for (size_t e : aug.a_edges) img.push_back(static_cast<int>(f[e]));
            ++from_aug[img];
        });
        CHECK(from_level == from_aug);
    }
}
