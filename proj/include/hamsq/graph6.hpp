#pragma once

#include <string>
#include <string_view>

#include "hamsq/graph.hpp"

namespace hamsq {

// nauty graph6, restricted to the single-byte size form (n <= 62).
// Decoding rejects malformed text, larger size prefixes and nonzero padding.
Graph graph6_decode(std::string_view text);
std::string graph6_encode(const Graph& g);

}  // namespace hamsq
