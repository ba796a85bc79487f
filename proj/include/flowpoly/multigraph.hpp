#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace flowpoly {

// One edge of a directed multigraph on [0,n]. Edges always point from the
// smaller to the larger vertex; `copy` (>= 1) distinguishes parallel edges.
struct Edge {
    int tail = 0;
    int head = 0;
    int copy = 1;

    auto operator<=>(const Edge&) const = default;
};

using VertexSet = std::set<int>;
using EdgeSubset = std::set<Edge>;

// Loopless directed multigraph on vertex set {0,...,n}, edges oriented
// small-to-large. Immutable: every mutator returns a new graph. The edge list
// is canonical (sorted by (tail, head, copy)) after construction.
class MultiGraph {
  public:
    MultiGraph() : n_(0) {}
    explicit MultiGraph(int n) : n_(check_n(n)) {}
    MultiGraph(int n, std::vector<Edge> edges);

    // Builds a graph from (tail, head, multiplicity) rows. Copy ids are
    // assigned in input order, accumulating across repeated (tail, head) rows.
    static MultiGraph from_rows(int n, const std::vector<std::array<int, 3>>& rows);

    int n() const { return n_; }
    int vertex_count() const { return n_ + 1; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(const Edge& e) const;
    size_t edge_index(const Edge& e) const;  // throws if absent
    int multiplicity(int tail, int head) const;
    bool is_simple() const;

    int indeg(int v) const;
    int outdeg(int v) const;
    // Number of edges from vertices in `s` to vertices outside `s`.
    int outdeg_set(const VertexSet& s) const;

    // Edges of G\0, i.e. the edges not incident to vertex 0.
    std::vector<Edge> edges_avoiding_zero() const;

    // G[0,i]: keep vertices 0..i and the edges among them. No relabeling.
    MultiGraph restrict(int i) const;

    // Deletes vertices and incident edges; remaining vertices are relabeled
    // to a contiguous range 0..k preserving their relative order.
    MultiGraph delete_vertices(const VertexSet& vs) const;

    // Contracts edge e, merging its head into its tail (the merged vertex
    // keeps the tail's position) and deleting created loops; remaining
    // vertices relabel contiguously and copy ids are recanonicalized per
    // parallel class. Throws if an edge would end up oriented large-to-small.
    MultiGraph contract_edge(const Edge& e) const;

    // Mirror image: edge (a,b) maps to (n-b, n-a). In the 1-based convention
    // for graphs on [n+1] this is the map (i,j) -> (n+1-j, n+1-i).
    MultiGraph mirror() const;

    // Graph on n+3 vertices: a new source s below 0 and sink t above n, with
    // edges (s,i) and (i,t) for every original vertex i. Relabeling: s -> 0,
    // original i -> i+1, t -> n+2.
    MultiGraph tilde() const;

    // Vertices reachable from i along directed (hence increasing) paths,
    // including i itself: the principal reachability set delta(i).
    VertexSet increasing_reach(int i) const;

    std::string canonical_string() const;
    uint64_t hash() const;

    bool operator==(const MultiGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

  private:
    static int check_n(int n);
    void check_vertex(int v) const;

    int n_;
    std::vector<Edge> edges_;
};

// tilde(G) with s and vertex 0 deleted and relabeled contiguously: vertices
// 0..n where j-1 stands for the original vertex j in [1,n] and n stands for t.
// terminal_edges[j-1] is the index of the edge (j-1, n), the edge from j to t.
struct TildeMinusS0 {
    MultiGraph graph;
    std::vector<size_t> terminal_edges;
};

TildeMinusS0 tilde_minus_s0(const MultiGraph& g);

}  // namespace flowpoly
