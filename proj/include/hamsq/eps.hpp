#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hamsq/cycles.hpp"
#include "hamsq/graph.hpp"
#include "hamsq/ham_search.hpp"

namespace hamsq {

// Spanning connected S = eul + forest: eul has only even degrees (it may be
// disconnected or empty), forest is a linear forest, the two edge-disjoint.
struct EpsDecomposition {
  Graph host;
  EdgeSet eul;
  EdgeSet forest;

  Graph subgraph() const;
};

// Spanning connected S = trail + eul + forest, the trail an open trail whose
// only odd vertices are its ends.
struct JepsDecomposition {
  Graph host;
  std::vector<Edge> trail;  // in traversal order from `from` to `to`
  int from = -1;
  int to = -1;
  EdgeSet eul;
  EdgeSet forest;

  Graph subgraph() const;
};

int forest_degree(const EdgeSet& forest, int v);

// Independent validity checks; return the first violated invariant.
std::optional<std::string> eps_error(const EpsDecomposition& s);
std::optional<std::string> jeps_error(const JepsDecomposition& s);

// Low-level contract for the decomposition search. The search colours each
// edge eulerian / forest / unused; `odd` lists vertices that must have odd
// degree in the eulerian-coloured part (empty for EPS, the trail ends for
// JEPS).
struct EpsConstraints {
  VertexSet no_forest;          // d_P = 0
  VertexSet light;              // d_P <= 1
  std::vector<Edge> in_eul;     // forced into the eulerian part
  VertexSet odd;
  VertexSet single_saturated;   // at most one of these may have d_P = 2
};

struct EpsSearchOptions {
  std::uint64_t node_budget = 0;  // 0 means unlimited
};

struct Colouring {
  std::vector<Edge> eul;
  std::vector<Edge> forest;
};

struct ColouringResult {
  SearchStatus status = SearchStatus::kExhausted;
  std::optional<Colouring> colouring;
  std::uint64_t nodes = 0;
};

// Minimises |forest|, then takes the lexicographically least colouring
// (edges in lexicographic order, eulerian < forest < unused).
ColouringResult search_colouring(const Graph& g, const EpsConstraints& c,
                                 const EpsSearchOptions& options = {});

struct EpsRequest {
  std::optional<int> root;            // d_P(root) = 0
  std::vector<int> light;             // d_P <= 1
  std::optional<Cycle> required_cycle;  // must lie in the eulerian part
};

struct EpsResult {
  SearchStatus status = SearchStatus::kExhausted;
  std::optional<EpsDecomposition> eps;
  std::uint64_t nodes = 0;
};

struct JepsResult {
  SearchStatus status = SearchStatus::kExhausted;
  std::optional<JepsDecomposition> jeps;
  std::uint64_t nodes = 0;
};

// Requires g connected. A root also listed as light is treated as root.
EpsResult find_eps(const Graph& g, const EpsRequest& request,
                   const EpsSearchOptions& options = {});

// Requires g connected, v != w.
JepsResult find_jeps(const Graph& g, int v, int w,
                     std::span<const int> forbidden_forest_at,
                     const EpsSearchOptions& options = {});

// Splits an eulerian-part edge set with odd vertices exactly {v, w} into the
// v-w trail covering v's component and the remaining even part.
JepsDecomposition make_jeps(const Graph& g, int v, int w, const Colouring& c);

using EpsOrJeps = std::variant<EpsDecomposition, JepsDecomposition>;

// EPS with d_P(v) = d_P(w) = 0, else a JEPS with ends v, w and
// d_P(v) = d_P(w) = 0. Requires g 2-connected; throws
// Error(kTheoremViolation) if neither exists.
EpsOrJeps theorem_a(const Graph& g, int v, int w);

// Cycle through v and w1 that also passes w2 whenever any cycle contains all
// three. Requires g 2-connected.
Cycle maximal_cycle(const Graph& g, int v, int w1, int w2);

struct EpsAnchors {
  std::optional<int> root;  // both cycle edges at root in G
  std::vector<int> light;   // at least one cycle edge in G at each (may be a root edge)
};

// Hamiltonian cycle of G^2 drawn from square(S) meeting the anchors. Requires
// g to be a DT-graph; throws Error(kTheoremViolation) when the anchors cannot
// be met.
HamWitness eps_to_ham_cycle(const Graph& g, const EpsDecomposition& s,
                            const EpsAnchors& anchors);

// from-to hamiltonian path of square(S); the first and last edges lie in G
// when the respective end has forest degree 0. Requires a DT-graph.
HamWitness jeps_to_ham_path(const Graph& g, const JepsDecomposition& s);

}  // namespace hamsq
