#include "flowpoly/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "flowpoly/flows.hpp"
#include "flowpoly/polynomial.hpp"

namespace flowpoly {

namespace {

std::string seq_to_string(const std::vector<int>& seq) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < seq.size(); ++i) os << (i ? "," : "") << seq[i];
    os << ")";
    return os.str();
}

std::string first_difference(const std::map<std::vector<int>, long long>& a,
                             const std::map<std::vector<int>, long long>& b) {
    for (const auto& [seq, mult] : a) {
        auto it = b.find(seq);
        long long other = it == b.end() ? 0 : it->second;
        if (other != mult)
            return seq_to_string(seq) + " has multiplicity " + std::to_string(mult) + " vs " +
                   std::to_string(other);
    }
    for (const auto& [seq, mult] : b)
        if (!a.count(seq)) return seq_to_string(seq) + " has multiplicity 0 vs " + std::to_string(mult);
    return "";
}

std::vector<EdgeSubset> all_subsets(const std::vector<Edge>& pool) {
    if (pool.size() > 22) throw std::invalid_argument("subset enumeration guard exceeded");
    std::vector<EdgeSubset> out;
    for (uint32_t mask = 0; mask < (1u << pool.size()); ++mask) {
        EdgeSubset f;
        for (size_t i = 0; i < pool.size(); ++i)
            if (mask >> i & 1) f.insert(pool[i]);
        out.push_back(std::move(f));
    }
    return out;
}

std::set<Exponent> support_of(const SparsePolynomial& p) { return p.support(); }

// Whether the underlying undirected graph of the edge list has no cycle.
// Union-find; a parallel pair is already a cycle.
bool underlying_forest(const std::vector<Edge>& edges) {
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
}

}  // namespace

VerifyReport verify_theorem_A(const MultiGraph& g, const std::vector<Strategy>& strategies) {
    VerifyReport rep;
    // First columns of Sol_G(F) over all F.
    std::map<std::vector<int>, long long> from_arrays;
    LDMultiset special = ld_multiset(g, special_strategy());
    for (const EdgeSubset& f : all_subsets(g.edges_avoiding_zero())) {
        auto cols = sol_first_columns(tri_array(g, f));
        for (const auto& [seq, mult] : cols) from_arrays[seq] += mult;
        // Per-subset refinement against the labeled special-tree leaves.
        auto labeled = ld_for_subset(special, f);
        std::string diff = first_difference(cols, labeled);
        if (!diff.empty()) {
            rep.fail("Sol_G(F) vs special tree at F of size " + std::to_string(f.size()) + ": " + diff);
            return rep;
        }
    }
    // codim = #F on every labeled leaf.
    for (const auto& [key, mult] : special)
        if (codim(g, key.first) != static_cast<long long>(key.second.size())) {
            rep.fail("codim of " + seq_to_string(key.first) + " differs from its label count");
            return rep;
        }
    std::map<std::vector<int>, long long> baseline = ld_aggregate(special);
    std::string diff = first_difference(baseline, from_arrays);
    if (!diff.empty()) {
        rep.fail("InSeq(T(G)) vs array first columns: " + diff);
        return rep;
    }
    for (size_t s = 0; s < strategies.size(); ++s) {
        auto ld = ld_aggregate(g, strategies[s]);
        diff = first_difference(baseline, ld);
        if (!diff.empty()) {
            rep.fail("strategy " + std::to_string(s) + " multiset differs: " + diff);
            return rep;
        }
    }
    return rep;
}

VerifyReport verify_encoding_chain(const MultiGraph& g, const EdgeSubset& f) {
    VerifyReport rep;
    auto sols = sol_enumerate(tri_array(g, f));
    Netflow b = b_vector(g, f);
    TildeMinusS0 ts = tilde_minus_s0(g);

    GrEncoding gr = gr_graph(g, f);
    std::map<std::map<std::tuple<int, int, int>, long long>, long long> gr_arrays;
    long long gr_count = 0;
    for_each_flow(gr.graph, gr.netflow, {}, [&](const std::vector<long long>& flow) {
        ++gr_count;
        std::map<std::tuple<int, int, int>, long long> values;
        for (const auto& [key, idx] : gr.carrier) values[key] = flow[idx];
        ++gr_arrays[values];
    });
    if (gr_count != static_cast<long long>(sols.size()))
        rep.fail("|Sol| = " + std::to_string(sols.size()) + " but K_Gr = " + std::to_string(gr_count));

    std::map<std::map<std::tuple<int, int, int>, long long>, long long> sol_arrays;
    for (const auto& s : sols) ++sol_arrays[s.values];
    if (sol_arrays != gr_arrays) rep.fail("Gr flow projections differ from the solution arrays");

    long long tilde_count = kostant(ts.graph, b);
    if (tilde_count != static_cast<long long>(sols.size()))
        rep.fail("K_{tilde G \\ {s,0}} = " + std::to_string(tilde_count) + " but |Sol| = " +
                 std::to_string(sols.size()));

    std::map<std::vector<int>, long long> psi;
    for_each_flow(ts.graph, b, {}, [&](const std::vector<long long>& flow) {
        std::vector<int> img(ts.terminal_edges.size());
        for (size_t i = 0; i < ts.terminal_edges.size(); ++i)
            img[i] = static_cast<int>(flow[ts.terminal_edges[i]]);
        ++psi[img];
    });
    std::map<std::vector<int>, long long> rho;
    for (const auto& s : sols) ++rho[first_column(s)];
    std::string diff = first_difference(rho, psi);
    if (!diff.empty()) rep.fail("rho(Sol) vs psi(flows): " + diff);
    return rep;
}

VerifyReport verify_encoding_chain_all(const MultiGraph& g) {
    VerifyReport rep;
    for (const EdgeSubset& f : all_subsets(g.edges_avoiding_zero())) {
        VerifyReport one = verify_encoding_chain(g, f);
        if (!one.ok) {
            rep.fail("F of size " + std::to_string(f.size()) + ": " + one.detail);
            return rep;
        }
    }
    return rep;
}

VerifyReport verify_genperm_theorems(const MultiGraph& g) {
    VerifyReport rep;
    LDMultiset special = ld_multiset(g, special_strategy());
    auto aggregated = ld_aggregate(special);
    const long long m = g.edge_count();

    // Per-F: Newton(L_{G,F}) = P^z{z_I^F} with saturated lattice points, and
    // the Minkowski y-form matches.
    for (const EdgeSubset& f : all_subsets(g.edges_avoiding_zero())) {
        auto zs = z_parameters(g, f);
        auto ldf = ld_for_subset(special, f);
        if (!zs) {
            if (!ldf.empty()) rep.fail("infeasible z but nonempty LD(G,F)");
            continue;
        }
        if (supermodularity_violation(*zs)) {
            rep.fail("z parameters not supermodular at some F");
            continue;
        }
        auto lattice = genperm_lattice_points(*zs);
        std::set<Exponent> sup;
        for (const auto& [seq, mult] : ldf) sup.insert(seq);
        if (std::set<Exponent>(lattice.begin(), lattice.end()) != sup) {
            rep.fail("lattice points of P^z differ from LD(G,F) for F of size " + std::to_string(f.size()));
            continue;
        }
        YParameters y = y_parameters(g, f);
        if (y.cover_violation) rep.fail("cover violation in the y lattice: " + y.detail);
        else if (!y.agrees_with_z) rep.fail("y-form mismatch: " + y.detail);
    }

    // Per-level: Newton(L_G^k) = P^z{z_I^(k)} saturated (the hyperplane slice
    // identity).
    SparsePolynomial lg = ld_polynomial(g);
    int max_k = static_cast<int>(g.edges_avoiding_zero().size());
    for (int k = 0; k <= max_k + 1; ++k) {
        auto zs = z_parameters_level(g, k);
        SparsePolynomial comp = lg.homogeneous_component(static_cast<int>(m) - k);
        if (!zs) {
            if (!comp.is_zero()) rep.fail("empty level polytope but nonzero component at k=" + std::to_string(k));
            continue;
        }
        if (supermodularity_violation(*zs)) {
            rep.fail("level z parameters not supermodular at k=" + std::to_string(k));
            continue;
        }
        auto lattice = genperm_lattice_points(*zs);
        if (std::set<Exponent>(lattice.begin(), lattice.end()) != support_of(comp))
            rep.fail("level lattice points differ from the degree-" + std::to_string(m - k) +
                     " support at k=" + std::to_string(k));
    }

    // Vol F_tilde(G) equals the lattice point count of the top component
    // polytope, and the top component has 0/1 coefficients. Both need the
    // top multiplicities to be 1, i.e. at most one flow per netflow on G\0:
    // exactly when G\0 is a forest as an undirected graph.
    if (underlying_forest(g.edges_avoiding_zero())) {
        auto z0 = z_parameters_level(g, 0);
        long long points = 0;
        if (z0) points = static_cast<long long>(genperm_lattice_points(*z0).size());
        if (points != volume(g)) rep.fail("volume differs from the lattice-point count of P_G^0");
        SparsePolynomial top = lg.homogeneous_component(static_cast<int>(m));
        for (const auto& [e, c] : top.terms())
            if (c != 1) rep.fail("top component coefficient " + std::to_string(c) + " is not 1");
    }

    // Capacitated flows on G^aug reproduce LD(G) with multiplicity.
    AugEncoding aug = aug_graph(g);
    std::map<std::vector<int>, long long> psi;
    for_each_flow(aug.graph, aug.b_empty, aug.caps, [&](const std::vector<long long>& flow) {
        std::vector<int> img(aug.a_edges.size());
        for (size_t i = 0; i < aug.a_edges.size(); ++i) img[i] = static_cast<int>(flow[aug.a_edges[i]]);
        ++psi[img];
    });
    std::string diff = first_difference(aggregated, psi);
    if (!diff.empty()) rep.fail("augmented-graph flows vs LD(G): " + diff);
    return rep;
}

VerifyReport verify_volume_ehrhart(const MultiGraph& g) {
    VerifyReport rep;
    long long vol = volume(g);
    long long full_leaves = 0;
    for_each_leaf(g, special_strategy(), [&](const LeafInfo& leaf) {
        if (leaf.graph.edge_count() == g.edge_count()) ++full_leaves;
    });
    if (vol != full_leaves)
        rep.fail("volume " + std::to_string(vol) + " differs from the full-dimensional leaf count " +
                 std::to_string(full_leaves));

    auto ehr = ehrhart(g);
    if (ehrhart_eval(ehr, 0) != 1) rep.fail("Ehr(0) != 1");
    MultiGraph tg = g.tilde();
    for (long long t = 1; t <= 3; ++t) {
        Netflow dilation(tg.vertex_count(), 0);
        dilation.front() = t;
        dilation.back() = -t;
        long long direct = kostant(tg, dilation);
        if (ehrhart_eval(ehr, t) != direct)
            rep.fail("Ehr(" + std::to_string(t) + ") differs from the dilation count " +
                     std::to_string(direct));
    }
    Rational lead = ehr.back();
    Rational fact = 1;
    for (size_t i = 2; i < ehr.size(); ++i) fact *= static_cast<long long>(i);
    if (lead * fact != vol) rep.fail("leading coefficient times d! differs from the volume");
    return rep;
}

VerifyReport verify_corollaries(const MultiGraph& g) {
    VerifyReport rep;
    VerifyReport a = verify_genperm_theorems(g);
    if (!a.ok) rep.fail(a.detail);
    VerifyReport b = verify_volume_ehrhart(g);
    if (!b.ok) rep.fail(b.detail);
    return rep;
}

std::vector<MultiGraph> all_simple_graphs(int max_n) {
    std::vector<MultiGraph> out;
    for (int n = 0; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) slots.push_back({i, j});
        for (uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
            std::vector<Edge> edges;
            for (size_t s = 0; s < slots.size(); ++s)
                if (mask >> s & 1) edges.push_back({slots[s].first, slots[s].second, 1});
            out.push_back(MultiGraph(n, std::move(edges)));
        }
    }
    return out;
}

std::vector<MultiGraph> all_multigraphs(int max_n, int max_edges) {
    std::vector<MultiGraph> out;
    for (int n = 0; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) slots.push_back({i, j});
        // Multiplicity vectors with total at most max_edges.
        std::vector<int> mult(slots.size(), 0);
        std::function<void(size_t, int)> rec = [&](size_t s, int used) {
            if (s == slots.size()) {
                std::vector<std::array<int, 3>> rows;
                for (size_t i = 0; i < slots.size(); ++i)
                    if (mult[i] > 0) rows.push_back({slots[i].first, slots[i].second, mult[i]});
                out.push_back(MultiGraph::from_rows(n, rows));
                return;
            }
            for (int m = 0; m + used <= max_edges; ++m) {
                mult[s] = m;
                rec(s + 1, used + m);
            }
            mult[s] = 0;
        };
        rec(0, 0);
    }
    return out;
}

MultiGraph random_multigraph(std::mt19937_64& rng, int max_n, int max_edges) {
    std::uniform_int_distribution<int> nd(1, max_n);
    int n = nd(rng);
    std::uniform_int_distribution<int> md(0, max_edges);
    int m = md(rng);
    std::vector<std::array<int, 3>> rows;
    std::uniform_int_distribution<int> vd(0, n);
    for (int e = 0; e < m; ++e) {
        int i = vd(rng), j = vd(rng);
        if (i == j) continue;
        rows.push_back({std::min(i, j), std::max(i, j), 1});
    }
    return MultiGraph::from_rows(n, rows);
}

}  // namespace flowpoly
