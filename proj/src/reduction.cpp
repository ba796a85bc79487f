#include "flowpoly/reduction.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace flowpoly {

namespace {

void check_reduction_site(const MultiGraph& g, const Edge& e1, const Edge& e2) {
    if (!g.has_edge(e1) || !g.has_edge(e2)) throw std::invalid_argument("reduce: edges not in the graph");
    if (e1.head != e2.tail) throw std::invalid_argument("reduce: e1 and e2 must share the middle vertex");
    if (!(e1.tail < e1.head && e2.tail < e2.head)) throw std::invalid_argument("reduce: bad orientation");
}

[[maybe_unused]] long long edge_length_potential(const MultiGraph& g) {
    long long p = 0;
    for (const Edge& e : g.edges()) p += e.head - e.tail;
    return p;
}

std::vector<Edge> without(const std::vector<Edge>& edges, const Edge& a) {
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const Edge& e : edges)
        if (!(e == a)) out.push_back(e);
    return out;
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

Edge reduction_new_edge(const MultiGraph& g, const Edge& e1, const Edge& e2) {
    check_reduction_site(g, e1, e2);
    int copy = 0;
    for (const Edge& e : g.edges())
        if (e.tail == e1.tail && e.head == e2.head) copy = std::max(copy, e.copy);
    return {e1.tail, e2.head, copy + 1};
}

std::array<MultiGraph, 3> reduce(const MultiGraph& g, const Edge& e1, const Edge& e2) {
    Edge fresh = reduction_new_edge(g, e1, e2);
    std::vector<Edge> base = g.edges();
    std::vector<Edge> g1 = without(base, e2);
    g1.push_back(fresh);
    std::vector<Edge> g2 = without(base, e1);
    g2.push_back(fresh);
    std::vector<Edge> g3 = without(without(base, e1), e2);
    g3.push_back(fresh);
    std::array<MultiGraph, 3> out{MultiGraph(g.n(), std::move(g1)), MultiGraph(g.n(), std::move(g2)),
                                  MultiGraph(g.n(), std::move(g3))};
    // Termination invariants: the length potential strictly grows on G1, G2
    // and the edge count drops on G3.
    assert(edge_length_potential(out[0]) > edge_length_potential(g));
    assert(edge_length_potential(out[1]) > edge_length_potential(g));
    assert(out[2].edge_count() == g.edge_count() - 1);
    return out;
}

bool is_leaf(const MultiGraph& g) {
    for (int v = 1; v < g.n(); ++v)
        if (g.indeg(v) > 0 && g.outdeg(v) > 0) return false;
    return true;
}

std::vector<Reduction> reducible_pairs(const MultiGraph& g) {
    std::vector<Reduction> out;
    for (const Edge& e1 : g.edges())
        for (const Edge& e2 : g.edges())
            if (e1.head == e2.tail) out.push_back({e1, e2});
    return out;
}

Strategy lex_first_strategy() {
    return [](const MultiGraph& g) {
        auto pairs = reducible_pairs(g);
        Reduction best = pairs.front();
        for (const auto& r : pairs)
            if (std::tuple(r.e1.head, r.e1, r.e2) < std::tuple(best.e1.head, best.e1, best.e2)) best = r;
        return best;
    };
}

Strategy lex_last_strategy() {
    return [](const MultiGraph& g) {
        auto pairs = reducible_pairs(g);
        Reduction best = pairs.front();
        for (const auto& r : pairs)
            if (std::tuple(r.e1.head, r.e1, r.e2) > std::tuple(best.e1.head, best.e1, best.e2)) best = r;
        return best;
    };
}

Strategy longest_edge_strategy() {
    return [](const MultiGraph& g) {
        auto pairs = reducible_pairs(g);
        auto key = [](const Reduction& r) {
            return std::tuple(-(r.e2.head - r.e2.tail), -(r.e1.head - r.e1.tail), r.e1.head, r.e1.copy,
                              r.e2.copy);
        };
        Reduction best = pairs.front();
        for (const auto& r : pairs)
            if (key(r) < key(best)) best = r;
        return best;
    };
}

Strategy random_strategy(uint64_t seed) {
    return [seed](const MultiGraph& g) {
        auto pairs = reducible_pairs(g);
        uint64_t h = g.hash();
        uint64_t pick = splitmix64(h ^ splitmix64(seed)) % pairs.size();
        return pairs[pick];
    };
}

Strategy special_strategy() {
    return [](const MultiGraph& g) {
        auto pairs = reducible_pairs(g);
        // Smallest frontier head first; at a fixed vertex the longest incoming
        // edge (smallest tail) first; copies low to high.
        auto key = [](const Reduction& r) {
            return std::tuple(r.e2.head, r.e2.tail, r.e1.tail, r.e1.copy, r.e2.copy);
        };
        Reduction best = pairs.front();
        for (const auto& r : pairs)
            if (key(r) < key(best)) best = r;
        return best;
    };
}

namespace {

// A graph together with the tree-wide identity of each edge, aligned with the
// canonical edge order.
struct TrackedGraph {
    MultiGraph g;
    std::vector<EdgeLabel> ids;
};

TrackedGraph track_root(const MultiGraph& g) {
    std::vector<EdgeLabel> ids;
    ids.reserve(g.edges().size());
    for (const Edge& e : g.edges()) ids.push_back({e, -1});
    return {g, std::move(ids)};
}

EdgeLabel label_of(const TrackedGraph& t, const Edge& e) { return t.ids[t.g.edge_index(e)]; }

TrackedGraph tracked_child(const TrackedGraph& t, const Edge& e1, const Edge& e2, const Edge& fresh,
                           const EdgeLabel& fresh_label, int which) {
    std::vector<std::pair<Edge, EdgeLabel>> rows;
    const auto& edges = t.g.edges();
    for (size_t i = 0; i < edges.size(); ++i) {
        if (which != 1 && edges[i] == e2) continue;
        if (which != 0 && edges[i] == e1) continue;
        rows.push_back({edges[i], t.ids[i]});
    }
    rows.push_back({fresh, fresh_label});
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Edge> es;
    std::vector<EdgeLabel> ids;
    for (auto& [e, id] : rows) {
        es.push_back(e);
        ids.push_back(id);
    }
    return {MultiGraph(t.g.n(), std::move(es)), std::move(ids)};
}

}  // namespace

void for_each_leaf(const MultiGraph& g, const Strategy& strategy,
                   const std::function<void(const LeafInfo&)>& visit) {
    long long next_id = 0;
    struct Item {
        TrackedGraph t;
        LabelSet labels;
    };
    std::vector<Item> stack;
    stack.push_back({track_root(g), {}});
    while (!stack.empty()) {
        Item item = std::move(stack.back());
        stack.pop_back();
        if (is_leaf(item.t.g)) {
            visit({item.t.g, item.labels});
            continue;
        }
        Reduction r = strategy(item.t.g);
        Edge fresh = reduction_new_edge(item.t.g, r.e1, r.e2);
        EdgeLabel fresh_label{fresh, next_id++};
        EdgeLabel g3_label = label_of(item.t, r.e2);
        LabelSet with_g3 = item.labels;
        with_g3.insert(std::upper_bound(with_g3.begin(), with_g3.end(), g3_label), g3_label);
        // Depth-first: push G3, G2, G1 so G1 is visited first.
        stack.push_back({tracked_child(item.t, r.e1, r.e2, fresh, fresh_label, 2), std::move(with_g3)});
        stack.push_back({tracked_child(item.t, r.e1, r.e2, fresh, fresh_label, 1), item.labels});
        stack.push_back({tracked_child(item.t, r.e1, r.e2, fresh, fresh_label, 0), std::move(item.labels)});
    }
}

size_t ReductionTree::leaf_count() const {
    size_t c = 0;
    for (const auto& node : nodes)
        if (node.children[0] < 0) ++c;
    return c;
}

ReductionTree build_tree(const MultiGraph& g, const Strategy& strategy, size_t max_nodes) {
    ReductionTree tree;
    long long next_id = 0;
    struct Item {
        TrackedGraph t;
        int index;
    };
    std::vector<Item> stack;
    tree.nodes.push_back({g, {-1, -1, -1}, std::nullopt, {}});
    stack.push_back({track_root(g), 0});
    while (!stack.empty()) {
        Item item = std::move(stack.back());
        stack.pop_back();
        if (is_leaf(item.t.g)) continue;
        Reduction r = strategy(item.t.g);
        Edge fresh = reduction_new_edge(item.t.g, r.e1, r.e2);
        EdgeLabel fresh_label{fresh, next_id++};
        tree.origins[fresh_label.derived_id] = {fresh, label_of(item.t, r.e1), label_of(item.t, r.e2)};
        tree.nodes[item.index].reduction = r;
        tree.nodes[item.index].e2_label = label_of(item.t, r.e2);
        for (int which = 0; which < 3; ++which) {
            TrackedGraph child = tracked_child(item.t, r.e1, r.e2, fresh, fresh_label, which);
            if (tree.nodes.size() >= max_nodes)
                throw std::runtime_error("build_tree: node limit exceeded (" + std::to_string(max_nodes) + ")");
            tree.nodes[item.index].children[which] = static_cast<int>(tree.nodes.size());
            tree.nodes.push_back({child.g, {-1, -1, -1}, std::nullopt, {}});
            stack.push_back({std::move(child), tree.nodes[item.index].children[which]});
        }
    }
    return tree;
}

ReductionTree special_tree(const MultiGraph& g, size_t max_nodes) {
    return build_tree(g, special_strategy(), max_nodes);
}

std::vector<int> left_degree_sequence(const MultiGraph& g) {
    std::vector<int> seq(g.n());
    for (const Edge& e : g.edges()) ++seq[e.head - 1];
    return seq;
}

LDMultiset ld_multiset(const MultiGraph& g, const Strategy& strategy) {
    LDMultiset ld;
    for_each_leaf(g, strategy, [&](const LeafInfo& leaf) {
        ++ld[{left_degree_sequence(leaf.graph), leaf.labels}];
    });
    return ld;
}

LDMultiset ld_multiset(const ReductionTree& tree) {
    // Walk the materialized tree re-accumulating labels.
    LDMultiset ld;
    struct Item {
        int index;
        LabelSet labels;
    };
    std::vector<Item> stack{{0, {}}};
    while (!stack.empty()) {
        Item item = std::move(stack.back());
        stack.pop_back();
        const auto& node = tree.nodes[item.index];
        if (node.children[0] < 0) {
            ++ld[{left_degree_sequence(node.graph), item.labels}];
            continue;
        }
        LabelSet with_g3 = item.labels;
        with_g3.insert(std::upper_bound(with_g3.begin(), with_g3.end(), node.e2_label), node.e2_label);
        stack.push_back({node.children[2], std::move(with_g3)});
        stack.push_back({node.children[1], item.labels});
        stack.push_back({node.children[0], std::move(item.labels)});
    }
    return ld;
}

std::map<std::vector<int>, long long> ld_aggregate(const LDMultiset& ld) {
    std::map<std::vector<int>, long long> out;
    for (const auto& [key, mult] : ld) out[key.first] += mult;
    return out;
}

std::map<std::vector<int>, long long> ld_aggregate(const MultiGraph& g, const Strategy& strategy) {
    std::map<std::vector<int>, long long> out;
    for_each_leaf(g, strategy,
                  [&](const LeafInfo& leaf) { ++out[left_degree_sequence(leaf.graph)]; });
    return out;
}

std::map<std::vector<int>, long long> ld_for_subset(const LDMultiset& ld, const EdgeSubset& f) {
    LabelSet want;
    for (const Edge& e : f) want.push_back({e, -1});
    std::sort(want.begin(), want.end());
    std::map<std::vector<int>, long long> out;
    for (const auto& [key, mult] : ld)
        if (key.second == want) out[key.first] += mult;
    return out;
}

long long codim(const MultiGraph& root, const std::vector<int>& seq) {
    return root.edge_count() - std::accumulate(seq.begin(), seq.end(), 0ll);
}

}  // namespace flowpoly
