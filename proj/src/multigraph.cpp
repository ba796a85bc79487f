#include "flowpoly/multigraph.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace flowpoly {

int MultiGraph::check_n(int n) {
    if (n < 0) throw std::invalid_argument("MultiGraph: n must be >= 0");
    return n;
}

void MultiGraph::check_vertex(int v) const {
    if (v < 0 || v > n_) throw std::invalid_argument("MultiGraph: unknown vertex " + std::to_string(v));
}

MultiGraph::MultiGraph(int n, std::vector<Edge> edges) : n_(check_n(n)), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.tail < 0 || e.head > n_ || e.tail >= e.head)
            throw std::invalid_argument("MultiGraph: edge must satisfy 0 <= tail < head <= n");
        if (e.copy < 1) throw std::invalid_argument("MultiGraph: copy ids start at 1");
        if (i > 0 && edges_[i - 1] == e)
            throw std::invalid_argument("MultiGraph: duplicate edge triple");
    }
}

MultiGraph MultiGraph::from_rows(int n, const std::vector<std::array<int, 3>>& rows) {
    std::map<std::pair<int, int>, int> next_copy;
    std::vector<Edge> edges;
    for (const auto& r : rows) {
        int mult = r[2];
        if (mult < 0) throw std::invalid_argument("MultiGraph: negative multiplicity");
        int& c = next_copy[{r[0], r[1]}];
        for (int m = 0; m < mult; ++m) edges.push_back({r[0], r[1], ++c});
    }
    return MultiGraph(n, std::move(edges));
}

bool MultiGraph::has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

size_t MultiGraph::edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || !(*it == e)) throw std::invalid_argument("MultiGraph: unknown edge");
    return static_cast<size_t>(it - edges_.begin());
}

int MultiGraph::multiplicity(int tail, int head) const {
    int c = 0;
    for (const Edge& e : edges_)
        if (e.tail == tail && e.head == head) ++c;
    return c;
}

bool MultiGraph::is_simple() const {
    for (const Edge& e : edges_)
        if (e.copy > 1) return false;
    return true;
}

int MultiGraph::indeg(int v) const {
    check_vertex(v);
    int c = 0;
    for (const Edge& e : edges_)
        if (e.head == v) ++c;
    return c;
}

int MultiGraph::outdeg(int v) const {
    check_vertex(v);
    int c = 0;
    for (const Edge& e : edges_)
        if (e.tail == v) ++c;
    return c;
}

int MultiGraph::outdeg_set(const VertexSet& s) const {
    for (int v : s) check_vertex(v);
    int c = 0;
    for (const Edge& e : edges_)
        if (s.count(e.tail) && !s.count(e.head)) ++c;
    return c;
}

std::vector<Edge> MultiGraph::edges_avoiding_zero() const {
    std::vector<Edge> out;
    for (const Edge& e : edges_)
        if (e.tail >= 1) out.push_back(e);
    return out;
}

MultiGraph MultiGraph::restrict(int i) const {
    check_vertex(i);
    std::vector<Edge> kept;
    for (const Edge& e : edges_)
        if (e.head <= i) kept.push_back(e);
    return MultiGraph(i, std::move(kept));
}

MultiGraph MultiGraph::delete_vertices(const VertexSet& vs) const {
    for (int v : vs) check_vertex(v);
    std::vector<int> relabel(n_ + 1, -1);
    int next = 0;
    for (int v = 0; v <= n_; ++v)
        if (!vs.count(v)) relabel[v] = next++;
    if (next == 0) throw std::invalid_argument("delete_vertices: cannot delete every vertex");
    std::vector<Edge> kept;
    for (const Edge& e : edges_)
        if (!vs.count(e.tail) && !vs.count(e.head))
            kept.push_back({relabel[e.tail], relabel[e.head], e.copy});
    return MultiGraph(next - 1, std::move(kept));
}

MultiGraph MultiGraph::contract_edge(const Edge& e) const {
    if (!has_edge(e)) throw std::invalid_argument("contract_edge: unknown edge");
    // Merge head into tail, then relabel the gap away.
    std::vector<int> relabel(n_ + 1, 0);
    for (int v = 0; v <= n_; ++v) relabel[v] = v > e.head ? v - 1 : v;
    std::vector<std::array<int, 3>> rows;
    for (const Edge& g : edges_) {
        if (g == e) continue;
        int a = g.tail == e.head ? e.tail : g.tail;
        int b = g.head == e.head ? e.tail : g.head;
        if (a == b) continue;  // loop created by the contraction
        if (a > b) throw std::invalid_argument("contract_edge: contraction breaks the small-to-large orientation");
        rows.push_back({relabel[a], relabel[b], 1});
    }
    return from_rows(n_ - 1, rows);
}

MultiGraph MultiGraph::mirror() const {
    std::vector<std::array<int, 3>> rows;
    std::vector<Edge> rev(edges_.rbegin(), edges_.rend());
    for (const Edge& e : rev) rows.push_back({n_ - e.head, n_ - e.tail, 1});
    return from_rows(n_, rows);
}

MultiGraph MultiGraph::tilde() const {
    std::vector<Edge> edges;
    for (const Edge& e : edges_) edges.push_back({e.tail + 1, e.head + 1, e.copy});
    for (int i = 0; i <= n_; ++i) {
        edges.push_back({0, i + 1, 1});
        edges.push_back({i + 1, n_ + 2, 1});
    }
    return MultiGraph(n_ + 2, std::move(edges));
}

VertexSet MultiGraph::increasing_reach(int i) const {
    check_vertex(i);
    VertexSet seen{i};
    std::queue<int> q;
    q.push(i);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const Edge& e : edges_)
            if (e.tail == v && !seen.count(e.head)) {
                seen.insert(e.head);
                q.push(e.head);
            }
    }
    return seen;
}

std::string MultiGraph::canonical_string() const {
    std::ostringstream os;
    os << n_;
    for (const Edge& e : edges_) os << ';' << e.tail << ',' << e.head << ',' << e.copy;
    return os.str();
}

uint64_t MultiGraph::hash() const {
    // FNV-1a over the canonical serialization.
    uint64_t h = 14695981039346656037ull;
    for (char c : canonical_string()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

TildeMinusS0 tilde_minus_s0(const MultiGraph& g) {
    const int n = g.n();
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (e.tail >= 1) edges.push_back({e.tail - 1, e.head - 1, e.copy});
    for (int j = 1; j <= n; ++j) edges.push_back({j - 1, n, 1});
    MultiGraph h(n, std::move(edges));
    std::vector<size_t> terminal(n);
    for (int j = 1; j <= n; ++j) terminal[j - 1] = h.edge_index({j - 1, n, 1});
    return {std::move(h), std::move(terminal)};
}

}  // namespace flowpoly
