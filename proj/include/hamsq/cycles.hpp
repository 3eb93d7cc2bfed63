#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hamsq/graph.hpp"

namespace hamsq {

// Cycles are vertex sequences without the repeated start vertex.
using Cycle = std::vector<int>;

// True iff `c` has >= 3 distinct vertices and consecutive (cyclic) pairs are
// edges of g.
bool is_cycle_of(const Graph& g, const Cycle& c);

std::vector<Edge> cycle_edges(const Cycle& c);

// Calls `visit` once per cycle (start at its least vertex, second vertex less
// than the last). Stops early when `visit` returns false.
void for_each_cycle(const Graph& g, const std::function<bool(const Cycle&)>& visit);

// First cycle in lexicographic DFS order from the least required vertex that
// passes through every vertex of `required` (non-empty).
std::optional<Cycle> find_cycle_through(const Graph& g, VertexSet required);

}  // namespace hamsq
