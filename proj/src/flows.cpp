#include "flowpoly/flows.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace flowpoly {

namespace {

struct FlowEnumerator {
    const MultiGraph& g;
    const Netflow& a;
    const UnitCapEdges& caps;
    const FlowVisitor& visit;
    std::vector<long long> flow;
    std::vector<long long> inflow;
    std::vector<size_t> out_begin;  // edges with tail v are [out_begin[v], out_begin[v+1])

    FlowEnumerator(const MultiGraph& g_, const Netflow& a_, const UnitCapEdges& caps_,
                   const FlowVisitor& visit_)
        : g(g_), a(a_), caps(caps_), visit(visit_) {
        flow.assign(g.edges().size(), 0);
        inflow.assign(g.vertex_count(), 0);
        out_begin.assign(g.vertex_count() + 1, g.edges().size());
        for (size_t i = g.edges().size(); i-- > 0;) out_begin[g.edges()[i].tail] = i;
        for (int v = g.vertex_count() - 1; v >= 0; --v)
            out_begin[v] = std::min(out_begin[v], out_begin[v + 1]);
    }

    long long cap(size_t e) const { return caps.count(e) ? 1 : -1; }  // -1 = unbounded

    void vertex(int v) {
        if (v == g.vertex_count()) {
            visit(flow);
            return;
        }
        long long need = a[v] + inflow[v];
        if (need < 0) return;
        spread(v, out_begin[v], need);
    }

    // Distribute `need` over the out-edges of v starting at edge index e.
    void spread(int v, size_t e, long long need) {
        if (e == out_begin[v + 1]) {
            if (need == 0) vertex(v + 1);
            return;
        }
        if (e + 1 == out_begin[v + 1]) {  // last out-edge takes the remainder
            long long c = cap(e);
            if (c >= 0 && need > c) return;
            flow[e] = need;
            inflow[g.edges()[e].head] += need;
            vertex(v + 1);
            inflow[g.edges()[e].head] -= need;
            flow[e] = 0;
            return;
        }
        long long hi = need;
        long long c = cap(e);
        if (c >= 0) hi = std::min(hi, c);
        for (long long x = 0; x <= hi; ++x) {
            flow[e] = x;
            inflow[g.edges()[e].head] += x;
            spread(v, e + 1, need - x);
            inflow[g.edges()[e].head] -= x;
            flow[e] = 0;
        }
    }
};

long long maxflow_augmenting(std::vector<std::vector<long long>>& cap, int s, int t) {
    const int v = static_cast<int>(cap.size());
    long long total = 0;
    while (true) {
        std::vector<int> prev(v, -1);
        prev[s] = s;
        std::queue<int> q;
        q.push(s);
        while (!q.empty() && prev[t] == -1) {
            int u = q.front();
            q.pop();
            for (int w = 0; w < v; ++w)
                if (prev[w] == -1 && cap[u][w] > 0) {
                    prev[w] = u;
                    q.push(w);
                }
        }
        if (prev[t] == -1) return total;
        long long aug = -1;
        for (int w = t; w != s; w = prev[w]) {
            long long c = cap[prev[w]][w];
            aug = aug < 0 ? c : std::min(aug, c);
        }
        for (int w = t; w != s; w = prev[w]) {
            cap[prev[w]][w] -= aug;
            cap[w][prev[w]] += aug;
        }
        total += aug;
    }
}

void check_netflow_size(const MultiGraph& g, const Netflow& a) {
    if (static_cast<int>(a.size()) != g.vertex_count())
        throw std::invalid_argument("netflow length must equal the vertex count");
}

}  // namespace

void for_each_flow(const MultiGraph& g, const Netflow& a, const UnitCapEdges& caps,
                   const FlowVisitor& visit, std::string* diagnostic) {
    check_netflow_size(g, a);
    long long sum = std::accumulate(a.begin(), a.end(), 0ll);
    if (sum != 0) {
        if (diagnostic) *diagnostic = "netflow entries sum to " + std::to_string(sum) + ", not 0";
        return;
    }
    FlowEnumerator en(g, a, caps, visit);
    en.vertex(0);
}

std::vector<std::vector<long long>> enumerate_flows(const MultiGraph& g, const Netflow& a,
                                                    const UnitCapEdges& caps,
                                                    std::string* diagnostic) {
    std::vector<std::vector<long long>> out;
    for_each_flow(g, a, caps, [&](const std::vector<long long>& f) { out.push_back(f); }, diagnostic);
    return out;
}

long long kostant(const MultiGraph& g, const Netflow& a, const UnitCapEdges& caps) {
    long long count = 0;
    for_each_flow(g, a, caps, [&](const std::vector<long long>&) { ++count; });
    return count;
}

bool feasible_by_subsets(const MultiGraph& g, const Netflow& a) {
    check_netflow_size(g, a);
    if (g.n() > 22) throw std::invalid_argument("feasible_by_subsets: vertex count exceeds the 2^n guard (n <= 22)");
    if (std::accumulate(a.begin(), a.end(), 0ll) != 0) return false;
    const int nv = g.vertex_count();
    // outdeg_set(S) == 0 means no edge leaves S.
    for (uint32_t mask = 1; mask + 1 < (1u << nv); ++mask) {
        bool closed = true;
        for (const Edge& e : g.edges())
            if ((mask >> e.tail & 1) && !(mask >> e.head & 1)) {
                closed = false;
                break;
            }
        if (!closed) continue;
        long long s = 0;
        for (int v = 0; v < nv; ++v)
            if (mask >> v & 1) s += a[v];
        if (s > 0) return false;
    }
    return true;
}

bool feasible_by_maxflow(const MultiGraph& g, const Netflow& a) {
    check_netflow_size(g, a);
    if (std::accumulate(a.begin(), a.end(), 0ll) != 0) return false;
    const int nv = g.vertex_count();
    long long supply = 0;
    for (long long x : a)
        if (x > 0) supply += x;
    if (supply == 0) return true;  // zero netflow: the zero flow works
    std::vector<std::vector<long long>> cap(nv + 2, std::vector<long long>(nv + 2, 0));
    const int s = nv, t = nv + 1;
    for (int v = 0; v < nv; ++v) {
        if (a[v] > 0) cap[s][v] = a[v];
        if (a[v] < 0) cap[v][t] = -a[v];
    }
    for (const Edge& e : g.edges()) cap[e.tail][e.head] += supply;
    return maxflow_augmenting(cap, s, t) == supply;
}

bool feasible(const MultiGraph& g, const Netflow& a) {
    bool mf = feasible_by_maxflow(g, a);
    if (g.n() <= 22) {
        bool sub = feasible_by_subsets(g, a);
        if (sub != mf) throw std::logic_error("feasible: subset and max-flow oracles disagree");
    }
    return mf;
}

long long min_functional(const MultiGraph& g, const Netflow& a, const std::set<size_t>& functional,
                         const UnitCapEdges& caps) {
    bool found = false;
    long long best = 0;
    for_each_flow(g, a, caps, [&](const std::vector<long long>& f) {
        long long v = 0;
        for (size_t e : functional) v += f[e];
        if (!found || v < best) best = v;
        found = true;
    });
    if (!found) throw std::domain_error("min_functional: infeasible flow instance");
    return best;
}

}  // namespace flowpoly
