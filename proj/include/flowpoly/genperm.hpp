#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flowpoly/multigraph.hpp"
#include "flowpoly/polynomial.hpp"
#include "flowpoly/reduction.hpp"

namespace flowpoly {

using Rational = boost::multiprecision::cpp_rational;

// Generalized permutahedron parameters: z[mask] for every subset of [n]
// (bit i-1 stands for i), z[0] = 0. The polytope lives on the hyperplane
// sum t_i = z[full] and satisfies sum_{i in I} t_i >= z[I] for proper I.
struct GenPermSpec {
    int n = 0;
    std::vector<long long> z;  // size 1 << n

    long long full() const { return z.empty() ? 0 : z.back(); }
};

// Minkowski-sum parameters: P = sum_I y[I] * Delta_I with y >= 0, y[0] = 0.
struct MinkowskiSpec {
    int n = 0;
    std::vector<long long> y;  // size 1 << n
};

// First (I, J) pair with z[I u J] + z[I n J] < z[I] + z[J], if any.
std::optional<std::pair<uint32_t, uint32_t>> supermodularity_violation(const GenPermSpec& spec);

// All integer points, sorted. Throws std::invalid_argument (naming the
// violating pair) when the parameters are not supermodular.
std::vector<Exponent> genperm_lattice_points(const GenPermSpec& spec);

// z_I = sum_{J subseteq I} y_J.
GenPermSpec minkowski_to_z(const MinkowskiSpec& m);

// --- Left/right-degree polynomials -----------------------------------------

// L_G = sum over LD(G) of (-1)^codim t^alpha, built from the special tree.
SparsePolynomial ld_polynomial(const MultiGraph& g);
// The degree #E(G)-k homogeneous component.
SparsePolynomial ld_component(const MultiGraph& g, int k);
// L_{G,F}: only the leaves labeled exactly F.
SparsePolynomial ld_F_polynomial(const MultiGraph& g, const EdgeSubset& f);

// Right-degree polynomial of a graph on [n+1] (stored 0-based):
// R_G(t_1..t_n) = L_{G*}(t_n..t_1).
SparsePolynomial rd_polynomial(const MultiGraph& g);

// R_G with the always-zero variables (vertices of zero outdegree) dropped and
// the survivors relabeled t_1..t_k.
SparsePolynomial reduced_rd(const MultiGraph& g);

// --- z- and y-parameters ----------------------------------------------------

// z_I^F: minimum of sum_{i in I} f(i,t) over integer flows on tilde(G)\{s,0}
// with netflow b_G^F. Cross-checked against the closed form
// z_I = sum_{i in I'} b_i with I' the largest subset of I of outdegree zero.
// Empty flow polytope yields nullopt.
std::optional<GenPermSpec> z_parameters(const MultiGraph& g, const EdgeSubset& f = {});

// Same with flows on the capacitated level graph G^(k).
std::optional<GenPermSpec> z_parameters_level(const MultiGraph& g, long long k);

// Largest subset of I (as mask over vertices 1..n) with outdeg_G = 0.
uint32_t largest_closed_subset(const MultiGraph& g, uint32_t mask);

struct YParameters {
    std::optional<MinkowskiSpec> y;
    bool cover_violation = false;  // a join-irreducible cover dropped != 1 vertex
    bool agrees_with_z = false;    // minkowski_to_z(y) == z_parameters(g, f)
    std::string detail;
};

// Minkowski form of Newton(L_{G,F}) read off the lattice of outdegree-zero
// subsets: a join-irreducible J covering J' with J \ J' = {k} gets
// y_J = indeg(k) - outdeg_F(k).
YParameters y_parameters(const MultiGraph& g, const EdgeSubset& f = {});

// --- Saturation / SNP -------------------------------------------------------

// Exact rational membership test q in conv(points) via phase-1 simplex with
// Bland's rule.
bool hull_membership(const Exponent& q, const std::vector<Exponent>& points);

struct SnpVerdict {
    bool snp = true;            // every lattice point of the Newton polytope is in the support
    bool components_gp = true;  // every homogeneous component hull is a generalized permutahedron
    std::map<int, bool> level_saturated;  // per degree: lattice(P^z) == support
    std::optional<Exponent> missing_point;
    std::optional<int> violation_level;
    std::string detail;
};

SnpVerdict snp_check(const SparsePolynomial& p);

// --- Volume and Ehrhart polynomial of F_{tilde(G)} --------------------------

long long volume(const MultiGraph& g);

// Coefficients of Ehr(F_{tilde(G)}, t), lowest degree first, length d+1 with
// d = #E(tilde G) - #V(tilde G) + 1 = #E(G) + n.
std::vector<Rational> ehrhart(const MultiGraph& g);

Rational ehrhart_eval(const std::vector<Rational>& coeffs, long long t);

}  // namespace flowpoly
