#pragma once

#include <random>
#include <string>
#include <vector>

#include "flowpoly/arrays.hpp"
#include "flowpoly/genperm.hpp"
#include "flowpoly/multigraph.hpp"
#include "flowpoly/reduction.hpp"

namespace flowpoly {

struct VerifyReport {
    bool ok = true;
    std::string detail;

    void fail(const std::string& msg) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += msg;
    }
};

// LD multisets of every strategy, InSeq of the special tree and the first
// columns of Sol_G(F) over all F all agree as multisets; labeled leaves of the
// special tree match Sol_G(F) subset by subset and codim(alpha) = #F.
VerifyReport verify_theorem_A(const MultiGraph& g, const std::vector<Strategy>& strategies);

// |Sol_G(F)| = K_{Gr(G)}(a_G^F) = K_{tilde G \ {s,0}}(b_G^F), the Gr flows
// project onto the solution arrays, and psi of the tilde flows reproduces
// rho(Sol_G(F)) with multiplicity.
VerifyReport verify_encoding_chain(const MultiGraph& g, const EdgeSubset& f);
VerifyReport verify_encoding_chain_all(const MultiGraph& g);

// The generalized-permutahedron package on one graph: z supermodular, lattice
// points match LD supports per F and per level, the Minkowski y-form agrees,
// the volume equals the lattice-point count of the top component, top
// component coefficients are 0/1 (simple graphs), and the capacitated
// augmented-graph flows reproduce LD(G) with multiplicity.
VerifyReport verify_genperm_theorems(const MultiGraph& g);

// Volume = full-dimensional leaf count of the special tree; the Ehrhart
// polynomial matches direct dilation counts at t = 1, 2, 3, has constant
// term 1 and leading coefficient volume/d!.
VerifyReport verify_volume_ehrhart(const MultiGraph& g);

VerifyReport verify_corollaries(const MultiGraph& g);

// Scan families. all_simple_graphs lists every simple graph on [0,n] for
// 0 <= n <= max_n; all_multigraphs every multigraph with at most max_edges
// total edges.
std::vector<MultiGraph> all_simple_graphs(int max_n);
std::vector<MultiGraph> all_multigraphs(int max_n, int max_edges);
MultiGraph random_multigraph(std::mt19937_64& rng, int max_n, int max_edges);

}  // namespace flowpoly
