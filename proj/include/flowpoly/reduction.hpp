#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flowpoly/multigraph.hpp"

namespace flowpoly {

// A single reduction site: e1 = (i,j) and e2 = (j,k) with i < j < k.
struct Reduction {
    Edge e1;
    Edge e2;
};

// The fresh copy id the new edge (i,k) receives in every child.
Edge reduction_new_edge(const MultiGraph& g, const Edge& e1, const Edge& e2);

// Replaces g by the three graphs of a reduction on (e1, e2):
//   G1 = g - e2 + (i,k),  G2 = g - e1 + (i,k),  G3 = g - e1 - e2 + (i,k).
std::array<MultiGraph, 3> reduce(const MultiGraph& g, const Edge& e1, const Edge& e2);

// A leaf admits no reduction: no vertex has both an incoming and an outgoing
// edge.
bool is_leaf(const MultiGraph& g);

std::vector<Reduction> reducible_pairs(const MultiGraph& g);

// Chooses the reduction to perform on a reducible graph. Must be a
// deterministic function of the graph.
using Strategy = std::function<Reduction(const MultiGraph&)>;

Strategy lex_first_strategy();    // smallest (j, e1, e2) site
Strategy lex_last_strategy();     // largest site
Strategy longest_edge_strategy(); // longest e2 then longest e1, low copies first
Strategy random_strategy(uint64_t seed);  // pure: hash of (graph, seed) picks the site

// The vertex-by-vertex special order: smallest head of e2 first (so each new
// vertex is fully processed before the next), then the longest edges at the
// current vertex, ties broken by lowest copy id. Building a tree with this
// strategy reproduces the special reduction tree T(G).
Strategy special_strategy();

// Identity of an edge across a reduction tree. Original edges of the root
// carry id -1 and are compared by their triple; an edge created by an earlier
// reduction carries the unique id of its creation event.
struct EdgeLabel {
    Edge edge;
    long long derived_id = -1;

    bool original() const { return derived_id < 0; }
    auto operator<=>(const EdgeLabel&) const = default;
};

using LabelSet = std::vector<EdgeLabel>;  // kept sorted

// Creation record of a derived edge, for dumps: the labels of the pair whose
// reduction created it.
struct EdgeOrigin {
    Edge edge;
    EdgeLabel from_e1;
    EdgeLabel from_e2;
};

struct LeafInfo {
    const MultiGraph& graph;
    const LabelSet& labels;  // the G3-edge labels along the root path
};

// Streams the leaves of the reduction tree of g under the strategy without
// materializing the tree.
void for_each_leaf(const MultiGraph& g, const Strategy& strategy,
                   const std::function<void(const LeafInfo&)>& visit);

struct ReductionTree {
    struct Node {
        MultiGraph graph;
        std::array<int, 3> children{-1, -1, -1};
        std::optional<Reduction> reduction;  // set on internal nodes
        EdgeLabel e2_label{};                // label of the reduced e2 (the G3 label)
    };
    std::vector<Node> nodes;  // nodes[0] is the root
    std::map<long long, EdgeOrigin> origins;

    size_t leaf_count() const;
};

ReductionTree build_tree(const MultiGraph& g, const Strategy& strategy,
                         size_t max_nodes = 2000000);

// The special reduction tree T(G), built vertex by vertex in the special
// reduction order.
ReductionTree special_tree(const MultiGraph& g, size_t max_nodes = 2000000);

// (indeg(1), ..., indeg(n)): the sequence a leaf contributes.
std::vector<int> left_degree_sequence(const MultiGraph& g);

// Multiset of left-degree sequences keyed by their accumulated label sets.
using LDKey = std::pair<std::vector<int>, LabelSet>;
using LDMultiset = std::map<LDKey, long long>;

LDMultiset ld_multiset(const MultiGraph& g, const Strategy& strategy);
LDMultiset ld_multiset(const ReductionTree& tree);

// Aggregation over the label sets.
std::map<std::vector<int>, long long> ld_aggregate(const LDMultiset& ld);
std::map<std::vector<int>, long long> ld_aggregate(const MultiGraph& g, const Strategy& strategy);

// LD(G, F): the sub-multiset with label set exactly F (original edges only).
std::map<std::vector<int>, long long> ld_for_subset(const LDMultiset& ld, const EdgeSubset& f);

long long codim(const MultiGraph& root, const std::vector<int>& seq);

}  // namespace flowpoly
