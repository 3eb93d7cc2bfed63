#pragma once

#include <span>
#include <utility>

#include "hamsq/ham_search.hpp"

namespace hamsq {

// Path surgery on witnesses. All results keep the original host; vertices no
// longer visited move to `omitted`, so square adjacency is always judged in
// the host. Annotations survive exactly when their edges do; constraints
// whose edges were cut (or that mention a removed vertex) are dropped from the
// result's spec. Every result is re-validated; Error(kInvalidArgument) is
// thrown when the operation's precondition or the validator fails.

// Drops u, joining its two sequence neighbours. u must not be a path end.
HamWitness shortcut(const HamWitness& w, int u);

// Inserts b into a: ea = (j, x) is consecutive in a, eb = (j, z) consecutive in
// the closed witness b, where j is the only vertex a and b share. The result
// replaces ea and eb by the walk around b and the bridge (x, z).
HamWitness splice(const HamWitness& a, const HamWitness& b, Edge ea, Edge eb,
                  Edge bridge);

// Joins open witnesses end to start; consecutive parts share exactly that
// junction vertex.
HamWitness concatenate(std::span<const HamWitness> parts);

}  // namespace hamsq
