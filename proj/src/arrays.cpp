#include "flowpoly/arrays.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace flowpoly {

namespace {

void check_f_subset(const MultiGraph& g, const EdgeSubset& f) {
    for (const Edge& e : f) {
        if (e.tail < 1) throw std::invalid_argument("F must avoid edges with tail 0");
        if (!g.has_edge(e)) throw std::invalid_argument("F contains an edge not in the graph");
    }
}

}  // namespace

ConstraintArray tri_array(const MultiGraph& g, const EdgeSubset& f) {
    check_f_subset(g, f);
    const int n = g.n();
    ConstraintArray a;
    a.n = n;
    a.simple_graph = g.is_simple();
    a.cum_edges.assign(n + 1, 0);
    for (int j = 1; j <= n; ++j) a.cum_edges[j] = g.restrict(j).edge_count();
    a.mult.assign(n + 1, std::vector<int>(n + 1, 0));
    a.offsets.assign(n + 1, std::vector<int>(n + 1, 0));
    for (int j = 1; j <= n; ++j)
        for (int i = j + 1; i <= n; ++i) a.mult[j][i] = g.multiplicity(j, i);
    for (const Edge& e : f)
        for (int i = e.head; i <= n; ++i) ++a.offsets[e.tail][i];
    return a;
}

namespace {

struct SolEnumerator {
    const ConstraintArray& a;
    const std::function<void(const SolutionArray&)>& emit;
    SolutionArray cur;

    SolEnumerator(const ConstraintArray& a_, const std::function<void(const SolutionArray&)>& emit_)
        : a(a_), emit(emit_) {
        cur.n = a.n;
    }

    void row(int j) {
        if (j > a.n) {
            emit(cur);
            return;
        }
        // Diagonal equation: a_{j,j} = #E(G[0,j]) - sum_{k<j} (a^(1)_{j,k} + f_{j,k}).
        long long diag = a.cum_edges[j];
        for (int k = 1; k < j; ++k) diag -= cur.at(k, j) + a.offsets[k][j];
        if (diag < 0) return;
        cur.values[{j, j, 1}] = diag;
        level(j, j + 1);
        cur.values.erase({j, j, 1});
    }

    void level(int j, int i) {
        if (i > a.n) {
            row(j + 1);
            return;
        }
        // Chain into level i: a^(top)_{i,j} + f_{i,j} <= a^(1)_{i-1,j} + f_{i-1,j}.
        long long upper = cur.at(j, i - 1) + a.offsets[j][i - 1] - a.offsets[j][i];
        int c = a.mult[j][i];
        if (c == 0) {
            if (upper < 0) return;  // equality forces a negative value
            cur.values[{j, i, 1}] = upper;
            level(j, i + 1);
            cur.values.erase({j, i, 1});
            return;
        }
        copies(j, i, c, upper);
    }

    // Choose a^(m)_{i,j} for m = c down to 1 with a^(m) <= bound.
    void copies(int j, int i, int m, long long bound) {
        if (m == 0) {
            level(j, i + 1);
            return;
        }
        for (long long v = 0; v <= bound; ++v) {
            cur.values[{j, i, m}] = v;
            copies(j, i, m - 1, v);
            cur.values.erase({j, i, m});
        }
    }
};

}  // namespace

std::vector<SolutionArray> sol_enumerate(const ConstraintArray& a) {
    std::vector<SolutionArray> out;
    std::function<void(const SolutionArray&)> emit = [&](const SolutionArray& s) { out.push_back(s); };
    SolEnumerator en(a, emit);
    en.row(1);
    return out;
}

long long sol_count(const ConstraintArray& a) {
    long long c = 0;
    std::function<void(const SolutionArray&)> emit = [&](const SolutionArray&) { ++c; };
    SolEnumerator en(a, emit);
    en.row(1);
    return c;
}

std::vector<int> first_column(const SolutionArray& s) {
    std::vector<int> col(s.n);
    for (int j = 1; j <= s.n; ++j) col[j - 1] = static_cast<int>(s.at(j, s.n));
    return col;
}

std::map<std::vector<int>, long long> sol_first_columns(const ConstraintArray& a) {
    std::map<std::vector<int>, long long> out;
    std::function<void(const SolutionArray&)> emit = [&](const SolutionArray& s) { ++out[first_column(s)]; };
    SolEnumerator en(a, emit);
    en.row(1);
    return out;
}

namespace {

std::string var_token(const ConstraintArray& a, int j, int i, int m, bool with_shift) {
    std::ostringstream os;
    os << "a_{" << i << "," << j << "}";
    if (!a.simple_graph) os << "^(" << m << ")";
    if (with_shift && a.offsets[j][i] > 0) os << "+" << a.offsets[j][i];
    return os.str();
}

}  // namespace

std::string render(const ConstraintArray& a) {
    std::ostringstream os;
    for (int j = 1; j <= a.n; ++j) {
        if (j > 1) os << "\n";
        os << a.offsets[j][a.n] << " <= ";
        for (int i = a.n; i > j; --i) {
            int c = std::max(a.mult[j][i], 1);
            for (int m = 1; m <= c; ++m) {
                os << var_token(a, j, i, m, true);
                os << (m < c ? " <= " : (a.mult[j][i] >= 1 ? " <= " : " = "));
            }
        }
        os << var_token(a, j, j, 1, false) << " = ";
        long long constant = a.cum_edges[j];
        for (int k = 1; k < j; ++k) constant -= a.offsets[k][j];
        os << constant;
        for (int k = 1; k < j; ++k) os << " - " << var_token(a, k, j, 1, false);
    }
    return os.str();
}

Netflow b_vector(const MultiGraph& g, const EdgeSubset& f) {
    check_f_subset(g, f);
    const int n = g.n();
    Netflow b(n + 1, 0);
    for (int j = 1; j <= n; ++j) b[j - 1] = g.indeg(j);
    for (const Edge& e : f) --b[e.tail - 1];
    b[n] = -(g.edge_count() - static_cast<long long>(f.size()));
    return b;
}

GrEncoding gr_graph(const MultiGraph& g, const EdgeSubset& f) {
    check_f_subset(g, f);
    ConstraintArray a = tri_array(g, f);
    const int n = g.n();

    // Column-major vertex order: for each column j the diagonal vertex, then
    // for each level i = j+1..n the carrier vertices m = c..1 in flow order;
    // the sink is last. carrier vertex (j,i,m) holds the value a^(m)_{i,j} on
    // its outgoing carrier edge.
    std::map<std::tuple<int, int, int>, int> vertex_of;  // (j,i,m); (j,j,1) = diagonal
    int next = 0;
    for (int j = 1; j <= n; ++j) {
        vertex_of[{j, j, 1}] = next++;
        for (int i = j + 1; i <= n; ++i) {
            int c = std::max(a.mult[j][i], 1);
            for (int m = c; m >= 1; --m) vertex_of[{j, i, m}] = next++;
        }
    }
    const int sink = next++;

    std::vector<std::array<int, 3>> rows;
    std::vector<std::tuple<int, int, int, int, int>> carrier_rows;  // (tail, head, j, i, m)
    auto add_carrier = [&](int tail, int head, int j, int i, int m) {
        rows.push_back({tail, head, 1});
        carrier_rows.push_back({tail, head, j, i, m});
    };
    for (int j = 1; j <= n; ++j) {
        // Carrier chain down the column; the edge leaving (j,i,m) carries
        // a^(m)_{i,j}, the one leaving the diagonal carries a_{j,j}.
        int prev = vertex_of[{j, j, 1}];
        int prev_j = j, prev_i = j, prev_m = 1;
        for (int i = j + 1; i <= n; ++i) {
            int c = std::max(a.mult[j][i], 1);
            for (int m = c; m >= 1; --m) {
                int v = vertex_of[{j, i, m}];
                add_carrier(prev, v, prev_j, prev_i, prev_m);
                prev = v;
                prev_j = j;
                prev_i = i;
                prev_m = m;
            }
        }
        add_carrier(prev, sink, prev_j, prev_i, prev_m);
        // One z edge per copy of (j,i), peeling to the diagonal of column i.
        for (int i = j + 1; i <= n; ++i)
            for (int m = 1; m <= a.mult[j][i]; ++m)
                rows.push_back({vertex_of[{j, i, m}], vertex_of[{i, i, 1}], 1});
    }

    GrEncoding enc{MultiGraph::from_rows(sink, rows), Netflow(sink + 1, 0), {}};

    // Carrier edges are the unique (tail, head) pairs added as carriers except
    // where a z edge shares the pair; copy 1 is always the carrier because
    // carriers were added first per (tail, head) pair.
    for (const auto& [tail, head, j, i, m] : carrier_rows)
        enc.carrier[{j, i, m}] = enc.graph.edge_index({tail, head, 1});

    for (int j = 1; j <= n; ++j) {
        enc.netflow[vertex_of[{j, j, 1}]] = g.indeg(j);
        for (int i = j + 1; i <= n; ++i) {
            int c = std::max(a.mult[j][i], 1);
            enc.netflow[vertex_of[{j, i, c}]] = a.offsets[j][i - 1] - a.offsets[j][i];
        }
    }
    enc.netflow[sink] = -(g.edge_count() - static_cast<long long>(f.size()));
    return enc;
}

AugEncoding aug_graph(const MultiGraph& g) {
    const int n = g.n();
    const int t = n;  // vertices: j-1 for j in [n], then t
    std::vector<Edge> edges;
    std::map<std::pair<int, int>, int> next_copy;
    auto add = [&](int tail, int head) {
        Edge e{tail, head, ++next_copy[{tail, head}]};
        edges.push_back(e);
        return e;
    };
    AugEncoding enc;
    std::vector<Edge> a_raw(n);
    for (int j = 1; j <= n; ++j) a_raw[j - 1] = add(j - 1, t);
    std::vector<Edge> z_raw, y_raw;
    for (const Edge& e : g.edges_avoiding_zero()) {
        z_raw.push_back(add(e.tail - 1, e.head - 1));
        y_raw.push_back(add(e.tail - 1, t));
        enc.y_source.push_back(e);
    }
    enc.graph = MultiGraph(n, edges);
    for (int j = 0; j < n; ++j) enc.a_edges.push_back(enc.graph.edge_index(a_raw[j]));
    for (const Edge& e : y_raw) {
        size_t idx = enc.graph.edge_index(e);
        enc.y_edges.push_back(idx);
        enc.caps.insert(idx);
    }
    enc.b_empty = b_vector(g, {});
    return enc;
}

LevelEncoding level_graph(const MultiGraph& g, long long k) {
    if (k < 0) throw std::invalid_argument("level_graph: k must be nonnegative");
    const int n = g.n();
    const int collector = n;  // original vertex n+1
    const int t = n + 1;
    std::vector<Edge> edges;
    std::map<std::pair<int, int>, int> next_copy;
    auto add = [&](int tail, int head) {
        Edge e{tail, head, ++next_copy[{tail, head}]};
        edges.push_back(e);
        return e;
    };
    LevelEncoding enc;
    std::vector<Edge> a_raw(n);
    for (int j = 1; j <= n; ++j) a_raw[j - 1] = add(j - 1, t);
    std::vector<Edge> y_raw;
    for (const Edge& e : g.edges_avoiding_zero()) {
        add(e.tail - 1, e.head - 1);
        y_raw.push_back(add(e.tail - 1, collector));
    }
    enc.graph = MultiGraph(t, edges);
    for (int j = 0; j < n; ++j) enc.a_edges.push_back(enc.graph.edge_index(a_raw[j]));
    for (const Edge& e : y_raw) {
        size_t idx = enc.graph.edge_index(e);
        enc.y_edges.push_back(idx);
        enc.caps.insert(idx);
    }
    enc.b_k.assign(n + 2, 0);
    for (int j = 1; j <= n; ++j) enc.b_k[j - 1] = g.indeg(j);
    enc.b_k[collector] = -k;
    enc.b_k[t] = k - g.edge_count();
    return enc;
}

}  // namespace flowpoly
