#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "flowpoly/arrays.hpp"
#include "flowpoly/genperm.hpp"
#include "flowpoly/multigraph.hpp"
#include "flowpoly/polynomial.hpp"
#include "flowpoly/reduction.hpp"

namespace flowpoly {

using Json = nlohmann::ordered_json;

// Graph text format: first line n, then one line per edge "tail head
// [multiplicity]". Round-trips exactly.
MultiGraph parse_graph_text(const std::string& text);
std::string graph_to_text(const MultiGraph& g);

// JSON equivalent: { "n": int, "edges": [[tail, head, multiplicity], ...] }.
MultiGraph graph_from_json(const Json& j);
Json graph_to_json(const MultiGraph& g);

// Reads either format, by extension or content sniffing, from a file.
MultiGraph load_graph(const std::string& path);

// Edge subsets: "tail,head[,copy]" items separated by ';'.
EdgeSubset parse_edge_subset(const MultiGraph& g, const std::string& text);

Netflow parse_netflow(const std::string& text);  // comma-separated integers

Json polynomial_to_json(const SparsePolynomial& p);
SparsePolynomial polynomial_from_json(const Json& j);

Json genperm_to_json(const GenPermSpec& spec);  // {"n": ..., "z": {"1,3": v, ...}}

Json ld_to_json(const MultiGraph& g, const LDMultiset& ld);

Json tree_to_json(const ReductionTree& tree);

Json ehrhart_to_json(const std::vector<Rational>& coeffs);

}  // namespace flowpoly
