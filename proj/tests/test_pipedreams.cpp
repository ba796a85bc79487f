#include <doctest.h>

#include <algorithm>

#include "flowpoly/genperm.hpp"
#include "flowpoly/pipedreams.hpp"

using namespace flowpoly;

namespace {

// The printed Schubert polynomial of 14523:
// x1^2 x2^2 + x1^2 x2 x3 + x1 x2^2 x3 + x1^2 x3^2 + x1 x2 x3^2 + x2^2 x3^2.
SparsePolynomial schubert_14523() {
    SparsePolynomial p(4);
    p.add_term({2, 2, 0, 0}, 1);
    p.add_term({2, 1, 1, 0}, 1);
    p.add_term({1, 2, 1, 0}, 1);
    p.add_term({2, 0, 2, 0}, 1);
    p.add_term({1, 1, 2, 0}, 1);
    p.add_term({0, 2, 2, 0}, 1);
    return p;
}

}  // namespace

TEST_CASE("tracing strands") {
    TraceResult none = trace(3, {});
    CHECK(none.perm == Permutation::identity(3));
    CHECK(none.reduced);

    TraceResult single = trace(2, {{1, 1}});
    CHECK(single.perm == Permutation::from_string("21"));
    CHECK(single.reduced);

    // The figure's reduced pipe dream for 2143: crosses at (1,1) and (1,3).
    TraceResult fig = trace(4, {{1, 1}, {1, 3}});
    CHECK(fig.perm == Permutation::from_string("2143"));
    CHECK(fig.reduced);

    // A second crossing bounces: {(1,2),(2,1)} traces to 132, not reduced.
    TraceResult twice = trace(3, {{1, 2}, {2, 1}});
    CHECK(twice.perm == Permutation::from_string("132"));
    CHECK_FALSE(twice.reduced);

    CHECK_THROWS_AS(trace(3, {{2, 2}}), std::invalid_argument);
}

TEST_CASE("pipe dream enumeration") {
    CHECK(pipe_dreams(Permutation::identity(4)).size() == 1);
    CHECK(pipe_dreams(Permutation::identity(4))[0].crosses.empty());

    // Independent brute force for RPD(2143): all 2-cross subsets that trace
    // to 2143.
    std::vector<std::pair<int, int>> staircase;
    for (int r = 1; r <= 3; ++r)
        for (int c = 1; c + r <= 4; ++c) staircase.push_back({r, c});
    long long brute = 0;
    for (uint32_t mask = 0; mask < (1u << staircase.size()); ++mask) {
        CrossSet crosses;
        for (size_t i = 0; i < staircase.size(); ++i)
            if (mask >> i & 1) crosses.insert(staircase[i]);
        if (crosses.size() != 2) continue;
        TraceResult t = trace(4, crosses);
        if (t.reduced && t.perm == Permutation::from_string("2143")) ++brute;
    }
    CHECK(static_cast<long long>(reduced_pipe_dreams(Permutation::from_string("2143")).size()) == brute);

    // Reduced dreams carry exactly inv(pi) crosses.
    Permutation pi = Permutation::from_string("3142");
    for (const PipeDream& d : reduced_pipe_dreams(pi))
        CHECK(static_cast<long long>(d.crosses.size()) == pi.inversions());
    for (const PipeDream& d : pipe_dreams(pi))
        CHECK(static_cast<long long>(d.crosses.size()) >= pi.inversions());
}

TEST_CASE("grothendieck and schubert polynomials") {
    CHECK(grothendieck(Permutation::identity(3)) == SparsePolynomial::constant(2, 1));
    CHECK(schubert(Permutation::identity(3)) == SparsePolynomial::constant(2, 1));

    SparsePolynomial g21 = grothendieck(Permutation::from_string("21"));
    CHECK(g21 == SparsePolynomial::monomial(1, {1}));

    // G_132 = t1 + t2 + t1 t2 in the unsigned convention.
    SparsePolynomial g132(2);
    g132.add_term({1, 0}, 1);
    g132.add_term({0, 1}, 1);
    g132.add_term({1, 1}, 1);
    CHECK(grothendieck(Permutation::from_string("132")) == g132);

    CHECK(schubert(Permutation::from_string("14523")) == schubert_14523());

    // The Schubert polynomial is the lowest homogeneous component.
    for (const char* s : {"1432", "14523", "21543", "2413"}) {
        Permutation pi = Permutation::from_string(s);
        SparsePolynomial g = grothendieck(pi);
        CHECK(g.lowest_component() == schubert(pi));
        CHECK(g.eval_all_ones() == static_cast<long long>(pipe_dreams(pi).size()));
    }
}

TEST_CASE("one-dominant detection") {
    auto shape = is_one_dominant(Permutation::from_string("14523"));
    REQUIRE(shape.has_value());
    CHECK(*shape == std::vector<int>{2, 2});

    CHECK(is_one_dominant(Permutation::identity(4)) == std::vector<int>{});
    CHECK_FALSE(is_one_dominant(Permutation::from_string("21")).has_value());
    CHECK(is_one_dominant(Permutation::from_string("1324")).has_value());       // code (1,0,0)
    CHECK_FALSE(is_one_dominant(Permutation::from_string("1243")).has_value());  // code (0,1,0)
}

TEST_CASE("transition rule on the worked example") {
    SparsePolynomial t = transition(Permutation::from_string("14523"));
    CHECK(t == schubert_14523());
    CHECK(transition(Permutation::identity(5)) == SparsePolynomial::constant(4, 1));
    CHECK_THROWS_AS(transition(Permutation::from_string("21")), std::invalid_argument);
}

TEST_CASE("transition agrees with pipe dreams across S5") {
    std::vector<int> v{1, 2, 3, 4, 5};
    do {
        Permutation pi(v);
        if (!is_one_dominant(pi)) continue;
        CHECK(transition(pi) == schubert(pi));
    } while (std::next_permutation(v.begin(), v.end()));
}

TEST_CASE("core column counts require the external construction") {
    CHECK_THROWS_AS(rd_core_column_counts(Permutation::from_string("14523")), std::logic_error);
}

TEST_CASE("theorem C verification") {
    TheoremCReport rep = verify_theorem_C(Permutation::from_string("14523"));
    CHECK(rep.ok());
    TheoremCReport id = verify_theorem_C(Permutation::identity(3));
    CHECK(id.ok());
    TheoremCReport na = verify_theorem_C(Permutation::from_string("21"));
    CHECK_FALSE(na.applicable);

    // Schubert of 1432 from pipe dreams passes the saturation checks.
    SnpVerdict v = snp_check(schubert(Permutation::from_string("1432")));
    CHECK(v.snp);
    CHECK(v.components_gp);
}

TEST_CASE("conjecture scan at n = 4") {
    ScanReport rep = conjecture_scan(4);
    CHECK(rep.permutations == 24);
    CHECK(rep.counterexamples == 0);
    ScanReport rep2 = conjecture_scan(4, 2);
    CHECK(rep2.counterexamples == 0);
}
