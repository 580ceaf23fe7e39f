#pragma once

/* Exhaustive generators for small labelled graphs: every multigraph (loops
 * and parallel edges included) on n vertices with at most max_edges edges,
 * every connected simple graph on n vertices, and every weight assignment
 * drawn from a fixed set of choices.  No isomorphism reduction anywhere:
 * graphs are labelled objects and duplicates by relabelling are intended.
 */

#include <functional>
#include <vector>

#include "gpoly/multigraph.hpp"

namespace gpoly {

// One call per multiset of edge slots (a slot is an unordered endpoint pair,
// loops included), so one call per labelled multigraph with <= max_edges
// edges.  Edges arrive sorted by slot.
void for_each_multigraph(int n, int max_edges, const std::function<void(const Multigraph&)>& fn);

// One call per connected simple graph on n labelled vertices.
void for_each_connected_simple_graph(int n, const std::function<void(const Multigraph&)>& fn);

// Every function {0, ..., slots-1} -> choices, as a vector of choices values.
void for_each_assignment(int slots, const std::vector<int>& choices,
                         const std::function<void(const std::vector<int>&)>& fn);

}  // namespace gpoly
