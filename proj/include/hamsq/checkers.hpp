#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>

#include "hamsq/graph.hpp"
#include "hamsq/ham_search.hpp"
#include "hamsq/report.hpp"

namespace hamsq {

// All checkers validate their structural preconditions (throwing
// Error(kPrecondition) / Error(kInvalidArgument)) and return the raw search
// result: kFound with a witness, kExhausted when provably none exists, or
// kUndecided when the node budget ran out.

// x1x2-hamiltonian path of g^2 with pairwise distinct G-edges at x3..xk.
HamSearchResult check_fk(const Graph& g, std::span<const int> xs,
                         const SearchOptions& options = {});

// Every ordered k-tuple of distinct vertices; stops at the first confirmed
// failure.
PropertyReport has_fk_property(const Graph& g, int k,
                               const SearchOptions& options = {});

// x1x2-path with distinct G-edges at x3 and at x_i, i in {1, 2}.
HamSearchResult check_strong_f3(const Graph& g, int x1, int x2, int x3, int i,
                                const SearchOptions& options = {});

// xy-path with a G-edge at x, and a G-edge at y or else an edge uv of the
// path with u, v in N(y). The witness annotation of constraint 1 records
// which branch held.
HamSearchResult check_theorem2(const Graph& g, int x, int y,
                               const SearchOptions& options = {});

// xy-path with a G-edge at q, q in {x, y}.
HamSearchResult check_endpoint_edge(const Graph& g, int x, int y, int q,
                                    const SearchOptions& options = {});

// Hamiltonian cycle of g^2, both v-edges in G, a G-edge at each w, all of
// these edges distinct.
HamSearchResult check_vw_ham_cycle(const Graph& g, int v, std::span<const int> ws,
                                   const SearchOptions& options = {});

// Three 2-valent vertices with identical neighbourhoods.
std::optional<std::array<int, 3>> fbar_triple(const Graph& g);
inline bool check_fbar(const Graph& g) { return fbar_triple(g).has_value(); }

// Neighbourhood hypotheses of the apex lemma: N(x3), N(x4) not inside V2 and
// N(x1) or N(x2) inside V2.
bool apex_hypotheses(const Graph& g, int x1, int x2, int x3, int x4);

// Hamiltonian cycle of (g+)^2, g+ = augment_apex(g, x1, x2) with apex y = n,
// through x1y, x2y and distinct G-edges at x3, x4. Requires g 2-connected and
// DT; the neighbourhood hypotheses are not enforced.
HamSearchResult check_apex_hc(const Graph& g, int x1, int x2, int x3, int x4,
                              const SearchOptions& options = {});

struct ChainWitnesses {
  HamSearchResult cycle;  // two v-edges in G when v's endblock is 2-connected
  HamSearchResult path;   // vw-path with G-edges at both ends
  bool strengthened = false;
};

// Requires a block chain with >= 2 blocks and >= 3 vertices, v and w
// non-cutvertices in different endblocks.
ChainWitnesses check_corollary1(const Graph& b, int v, int w,
                                const SearchOptions& options = {});

// Hamiltonian cycle of g^2 through e with distinct G-edges at u and v.
HamSearchResult check_corollary2(const Graph& g, Edge e, int u, int v,
                                 const SearchOptions& options = {});

// True iff v and w are non-cutvertices lying in different endblocks of the
// non-trivial block chain g.
bool chain_endpoints_ok(const Graph& g, int v, int w);

}  // namespace hamsq
