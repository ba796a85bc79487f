#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "flowpoly/flows.hpp"
#include "flowpoly/multigraph.hpp"

namespace flowpoly {

// The triangular constraint array Tri_G(F), stored structurally. Row j holds
// the chain a^(1)_{n,j} <= ... <= a^(1)_{j,j} with one variable group per
// level i in [j, n]: mult(j,i) parallel copies of the edge (j,i) give mult
// chained variables (equality links when the edge is absent), and the F
// offsets shift each occurrence of a_{i,j} by f_{i,j} = #{(j,k) in F : k <= i}.
struct ConstraintArray {
    int n = 0;
    bool simple_graph = true;
    std::vector<long long> cum_edges;       // cum_edges[j] = #E(G[0,j]), 1-based
    std::vector<std::vector<int>> mult;     // mult[j][i], 1 <= j < i <= n
    std::vector<std::vector<int>> offsets;  // offsets[j][i] = f_{i,j}, 1 <= j <= i <= n
};

// Values of one solution array: value(j, i, m) = a^(m)_{i,j}. Level i == j is
// the diagonal (single copy m = 1).
struct SolutionArray {
    int n = 0;
    std::map<std::tuple<int, int, int>, long long> values;  // (j, i, m) -> value

    long long at(int j, int i, int m = 1) const { return values.at({j, i, m}); }
};

ConstraintArray tri_array(const MultiGraph& g, const EdgeSubset& f = {});

// All nonnegative integer solutions, in a fixed deterministic order (rows
// ascending, levels descending from the diagonal, values ascending).
std::vector<SolutionArray> sol_enumerate(const ConstraintArray& a);
long long sol_count(const ConstraintArray& a);

// The first column (a^(1)_{n,1}, ..., a^(1)_{n,n}) of a solution: its
// left-degree sequence.
std::vector<int> first_column(const SolutionArray& s);

std::map<std::vector<int>, long long> sol_first_columns(const ConstraintArray& a);

// Text rendering in the row layout used throughout:
//   0 <= a_{4,1} = a_{3,1} = a_{2,1} <= a_{1,1} = 1
// Multigraph arrays carry copy superscripts a_{i,j}^(m).
std::string render(const ConstraintArray& a);

// The flow-graph encoding of Tri_G(F): a graph Gr(G) and netflow a_G^F whose
// integer flows project onto Sol_G(F) via the carrier edges. For a simple
// graph this is the column-major grid construction verbatim; parallel edges
// chain extra carrier vertices, one per copy, each peeling one z edge.
struct GrEncoding {
    MultiGraph graph;
    Netflow netflow;
    // carrier[(j, i, m)] = edge index holding the value a^(m)_{i,j}; the
    // diagonal carrier is (j, j, 1).
    std::map<std::tuple<int, int, int>, size_t> carrier;
};

GrEncoding gr_graph(const MultiGraph& g, const EdgeSubset& f = {});

// b_G^F = (indeg(1)-outdeg_F(1), ..., indeg(n)-outdeg_F(n), -#E(G\F)).
Netflow b_vector(const MultiGraph& g, const EdgeSubset& f = {});

// The augmented graph G^aug on [n] u {t} (relabeled 0..n, t = n): per edge
// (j,i) of G\0 a z edge j->i and a unit-capacity y edge j->t, plus one a edge
// j->t per vertex.
struct AugEncoding {
    MultiGraph graph;
    Netflow b_empty;                 // b_G^empty
    std::vector<size_t> a_edges;     // a_edges[j-1] = index of the a edge of vertex j
    std::vector<size_t> y_edges;     // in (head, copy) order of the source edges
    std::vector<Edge> y_source;      // the edge of G\0 each y edge stands for
    UnitCapEdges caps;               // the y edges
};

AugEncoding aug_graph(const MultiGraph& g);

// G^(k) on [1,n+1] u {t} (relabeled: j-1 for j in [1,n+1], t = n+1): y edges
// point at the collector vertex n+1 (original n+1) with netflow -k there.
struct LevelEncoding {
    MultiGraph graph;
    Netflow b_k;
    std::vector<size_t> a_edges;
    std::vector<size_t> y_edges;
    UnitCapEdges caps;
};

LevelEncoding level_graph(const MultiGraph& g, long long k);

}  // namespace flowpoly
