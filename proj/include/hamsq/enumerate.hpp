#pragma once

#include <cstdint>
#include <vector>

#include "hamsq/graph.hpp"

namespace hamsq {

// Largest order for which canonical codes fit in 64 bits.
inline constexpr int kMaxCanonicalOrder = 11;

// Minimum, over relabellings that respect an isomorphism-invariant colour
// refinement, of the graph6 edge-bit string read as a binary number (first
// bit most significant). Equal codes <=> isomorphic graphs.
std::uint64_t canonical_code(const Graph& g);

// The relabelled graph whose plain code equals canonical_code(g).
Graph canonical_form(const Graph& g);

// Graph with the given order and code (inverse of the plain code).
Graph graph_from_code(int n, std::uint64_t code);

// Code of g under its current labelling.
std::uint64_t plain_code(const Graph& g);

enum class Family { kAll, kDt, kEdgeCritical };

// One canonical representative per isomorphism class of connected graphs on
// n vertices, sorted by code. 1 <= n <= 10. Memoized and thread-safe.
const std::vector<Graph>& enumerate_connected(int n);

// 2-connected classes on n vertices, optionally filtered. 3 <= n <= 10.
std::vector<Graph> enumerate_2connected(int n, Family filter = Family::kAll);

}  // namespace hamsq
