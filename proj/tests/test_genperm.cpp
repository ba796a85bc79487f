#include <doctest.h>

#include <random>

#include "flowpoly/genperm.hpp"
#include "flowpoly/verify.hpp"

using namespace flowpoly;

namespace {

MultiGraph path3() { return MultiGraph::from_rows(2, {{0, 1, 1}, {1, 2, 1}}); }
MultiGraph single_edge() { return MultiGraph::from_rows(1, {{0, 1, 1}}); }

GenPermSpec make_spec(int n, std::vector<long long> z) { return {n, std::move(z)}; }

}  // namespace

TEST_CASE("left-degree polynomials of tiny graphs") {
    CHECK(ld_polynomial(single_edge()) == SparsePolynomial::monomial(1, {1}));

    // LD = {(1,1), (0,2), (0,1) at codim 1}: L = t1 t2 + t2^2 - t2.
    SparsePolynomial expected(2);
    expected.add_term({1, 1}, 1);
    expected.add_term({0, 2}, 1);
    expected.add_term({0, 1}, -1);
    CHECK(ld_polynomial(path3()) == expected);

    SparsePolynomial top(2);
    top.add_term({1, 1}, 1);
    top.add_term({0, 2}, 1);
    CHECK(ld_component(path3(), 0) == top);
    SparsePolynomial codim1(2);
    codim1.add_term({0, 1}, -1);
    CHECK(ld_component(path3(), 1) == codim1);
    CHECK(ld_F_polynomial(path3(), {{1, 2, 1}}) == codim1);

    // No edges: the empty product.
    CHECK(ld_polynomial(MultiGraph(2)) == SparsePolynomial::constant(2, 1));
}

TEST_CASE("right-degree polynomials") {
    // Single edge 1->2 on [2] is stored as 0->1 on [0,1]: R = t1.
    CHECK(rd_polynomial(single_edge()) == SparsePolynomial::monomial(1, {1}));
    // A mirror-symmetric graph: R equals L with reversed variables.
    SparsePolynomial l = ld_polynomial(path3());
    std::vector<int> rev{1, 0};
    CHECK(rd_polynomial(path3()) == l.substitute_variables(rev));
    // reduced_rd drops exactly the zero-outdegree variables.
    MultiGraph g = MultiGraph::from_rows(3, {{0, 2, 1}, {2, 3, 1}});
    SparsePolynomial r = reduced_rd(g);
    CHECK(r.nvars() == 2);  // vertices 0 and 2 have positive outdegree
}

TEST_CASE("z parameters of the path") {
    auto z = z_parameters(path3());
    REQUIRE(z.has_value());
    CHECK(z->n == 2);
    CHECK(z->z[0b01] == 0);
    CHECK(z->z[0b10] == 1);
    CHECK(z->z[0b11] == 2);
    CHECK_FALSE(supermodularity_violation(*z));

    auto zf = z_parameters(path3(), {{1, 2, 1}});
    REQUIRE(zf.has_value());
    CHECK(zf->z[0b01] == 0);
    CHECK(zf->z[0b10] == 1);
    CHECK(zf->z[0b11] == 1);

    // z_[n] is the total flow into t.
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        MultiGraph g = random_multigraph(rng, 3, 5);
        auto pool = g.edges_avoiding_zero();
        EdgeSubset f;
        for (const Edge& e : pool)
            if (rng() % 2) f.insert(e);
        auto zz = z_parameters(g, f);
        if (!zz) continue;
        CHECK(zz->full() == g.edge_count() - static_cast<long long>(f.size()));
    }
}

TEST_CASE("lattice points of generalized permutahedra") {
    auto z = z_parameters(path3());
    auto pts = genperm_lattice_points(*z);
    CHECK(pts == std::vector<Exponent>{{0, 2}, {1, 1}});

    // A single point: modular z.
    GenPermSpec point = make_spec(2, {0, 3, 4, 7});
    CHECK(genperm_lattice_points(point) == std::vector<Exponent>{{3, 4}});

    // Hypersimplex z_I = max(0, |I| - (n-k)).
    for (int n : {3, 4}) {
        for (int k = 1; k < n; ++k) {
            GenPermSpec hyper;
            hyper.n = n;
            hyper.z.assign(size_t{1} << n, 0);
            for (uint32_t mask = 1; mask < (1u << n); ++mask)
                hyper.z[mask] = std::max(0, __builtin_popcount(mask) - (n - k));
            auto points = genperm_lattice_points(hyper);
            long long binom = 1;
            for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
            CHECK(static_cast<long long>(points.size()) == binom);
            for (const auto& p : points) {
                int sum = 0;
                for (int x : p) {
                    CHECK(x >= 0);
                    CHECK(x <= 1);
                    sum += x;
                }
                CHECK(sum == k);
            }
        }
    }

    GenPermSpec bad = make_spec(2, {0, 1, 1, 1});
    CHECK(supermodularity_violation(bad).has_value());
    CHECK_THROWS_WITH_AS(genperm_lattice_points(bad),
                         "genperm_lattice_points: not supermodular at I={1}, J={2}",
                         std::invalid_argument);
}

TEST_CASE("minkowski to z") {
    MinkowskiSpec simplex{2, {0, 0, 0, 1}};
    GenPermSpec z = minkowski_to_z(simplex);
    CHECK(z.z == std::vector<long long>{0, 0, 0, 1});

    // Path decomposition Delta_{1,2} + Delta_{2} matches the z parameters.
    MinkowskiSpec path_y{2, {0, 0, 1, 1}};
    CHECK(minkowski_to_z(path_y).z == z_parameters(path3())->z);
}

TEST_CASE("y parameters") {
    YParameters y = y_parameters(path3());
    REQUIRE(y.y.has_value());
    CHECK_FALSE(y.cover_violation);
    CHECK(y.agrees_with_z);
    CHECK(y.y->y[0b10] == 1);  // {2}
    CHECK(y.y->y[0b11] == 1);  // {1,2}

    // Isolated non-source vertex: {v} is join-irreducible with y = indeg.
    MultiGraph g = MultiGraph::from_rows(2, {{0, 1, 2}});
    YParameters y2 = y_parameters(g);
    REQUIRE(y2.y.has_value());
    CHECK(y2.y->y[0b01] == 2);  // delta(1) = {1}
    CHECK(y2.agrees_with_z);

    // Pitman-Stanley shape: transitive closure of G\0 complete.
    MultiGraph ps = MultiGraph::from_rows(2, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
    YParameters y3 = y_parameters(ps);
    REQUIRE(y3.y.has_value());
    CHECK(y3.y->y[0b10] == ps.indeg(2));  // x_n Delta_{n}
    CHECK(y3.y->y[0b11] == ps.indeg(1));  // x_1 Delta_[n]
    CHECK(y3.agrees_with_z);
}

TEST_CASE("y parameters cross-check against z on the simple scan") {
    for (const MultiGraph& g : all_simple_graphs(3)) {
        for (uint32_t mask = 0; mask < (1u << g.edges_avoiding_zero().size()); ++mask) {
            auto pool = g.edges_avoiding_zero();
            EdgeSubset f;
            for (size_t i = 0; i < pool.size(); ++i)
                if (mask >> i & 1) f.insert(pool[i]);
            YParameters y = y_parameters(g, f);
            if (!z_parameters(g, f)) continue;
            CHECK_FALSE(y.cover_violation);
            CHECK(y.agrees_with_z);
        }
    }
}

TEST_CASE("hull membership") {
    CHECK(hull_membership({1, 1}, {{2, 0}, {0, 2}}));
    CHECK_FALSE(hull_membership({2, 2}, {{2, 0}, {0, 2}}));
    CHECK(hull_membership({2, 0}, {{2, 0}, {0, 2}}));
    CHECK(hull_membership({1, 1, 1}, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}}));
    CHECK_FALSE(hull_membership({3, 1, 1}, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}}));
    CHECK_THROWS_AS(hull_membership({1}, {{1, 2}}), std::invalid_argument);
}

TEST_CASE("snp verdicts") {
    SparsePolynomial tri(2);
    tri.add_term({0, 0}, 1);
    tri.add_term({1, 0}, 1);
    tri.add_term({0, 1}, 1);
    SnpVerdict v = snp_check(tri);
    CHECK(v.snp);
    CHECK(v.components_gp);

    SparsePolynomial gap(2);
    gap.add_term({2, 0}, 1);
    gap.add_term({0, 2}, 1);
    SnpVerdict v2 = snp_check(gap);
    CHECK_FALSE(v2.snp);
    REQUIRE(v2.missing_point.has_value());
    CHECK(*v2.missing_point == Exponent{1, 1});
}

TEST_CASE("volume and ehrhart of the single edge") {
    CHECK(volume(single_edge()) == 1);
    auto ehr = ehrhart(single_edge());
    // (t+1)(t+2)/2
    REQUIRE(ehr.size() == 3);
    CHECK(ehr[0] == 1);
    CHECK(ehr[1] == Rational(3, 2));
    CHECK(ehr[2] == Rational(1, 2));
    CHECK(ehrhart_eval(ehr, 0) == 1);
    CHECK(ehrhart_eval(ehr, 3) == 10);
}

TEST_CASE("volume equals the full-dimensional leaf count") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 12; ++trial) {
        MultiGraph g = random_multigraph(rng, 3, 5);
        CHECK(verify_volume_ehrhart(g).ok);
    }
}

TEST_CASE("genperm theorems on the worked examples") {
    CHECK(verify_genperm_theorems(path3()).ok);
    CHECK(verify_genperm_theorems(MultiGraph::from_rows(2, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}})).ok);
    CHECK(verify_genperm_theorems(MultiGraph::from_rows(2, {{0, 1, 2}, {1, 2, 2}})).ok);
}

TEST_CASE("top right-degree component has 0/1 coefficients on forests") {
    // Multiplicities in the top component count flows on the mirrored graph
    // minus its source, so the forest condition is checked there.
    auto forest = [](const std::vector<Edge>& edges) {
        std::map<int, int> parent;
        std::function<int(int)> find = [&](int v) {
            if (!parent.count(v)) parent[v] = v;
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (const Edge& e : edges) {
            int a = find(e.tail), b = find(e.head);
            if (a == b) return false;
            parent[a] = b;
        }
        return true;
    };
    for (const MultiGraph& g : all_simple_graphs(3)) {
        if (!forest(g.mirror().edges_avoiding_zero())) continue;
        SparsePolynomial r = reduced_rd(g);
        SparsePolynomial top = r.homogeneous_component(g.edge_count());
        for (const auto& [e, c] : top.terms()) CHECK(c == 1);
    }
}
