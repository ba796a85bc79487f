#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "flowpoly/multigraph.hpp"

namespace flowpoly {

// Per-vertex net flow, in vertex order. Entries of a feasible instance sum
// to zero; this is asserted at use sites, not at construction.
using Netflow = std::vector<long long>;

// Edge indices (into the canonical edge list) carrying a 0/1 capacity.
using UnitCapEdges = std::set<size_t>;

using FlowVisitor = std::function<void(const std::vector<long long>&)>;

// Enumerates every integer flow on g with the given netflow exactly once, in
// lexicographic order of the flow vector over the canonical edge order.
// A netflow that does not sum to zero yields no flows (diagnostic optional).
void for_each_flow(const MultiGraph& g, const Netflow& a, const UnitCapEdges& caps,
                   const FlowVisitor& visit, std::string* diagnostic = nullptr);

std::vector<std::vector<long long>> enumerate_flows(const MultiGraph& g, const Netflow& a,
                                                    const UnitCapEdges& caps = {},
                                                    std::string* diagnostic = nullptr);

// Kostant partition function: the number of integer points of the flow
// polytope F_g(a), optionally with unit capacities on selected edges.
long long kostant(const MultiGraph& g, const Netflow& a, const UnitCapEdges& caps = {});

// Feasibility of F_g(a) by explicit subset enumeration: sum(a) == 0 and
// sum_{i in S} a_i <= 0 for every S with outdeg_set(g, S) == 0. Guarded to
// n <= 22 vertices.
bool feasible_by_subsets(const MultiGraph& g, const Netflow& a);

// Feasibility via the max-flow construction: auxiliary source/sink with
// capacities |a_i| on their edges and sum of positive entries on internal
// edges; feasible iff the maximum flow saturates the source edges.
bool feasible_by_maxflow(const MultiGraph& g, const Netflow& a);

// Runs both checks and throws if they ever disagree.
bool feasible(const MultiGraph& g, const Netflow& a);

// Minimum of sum_{e in functional} f(e) over all integer flows (which equals
// the minimum over the whole polytope: these polytopes have integral
// vertices). Throws std::domain_error when the instance is infeasible.
long long min_functional(const MultiGraph& g, const Netflow& a, const std::set<size_t>& functional,
                         const UnitCapEdges& caps = {});

}  // namespace flowpoly
