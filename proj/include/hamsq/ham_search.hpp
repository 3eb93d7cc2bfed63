#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamsq/graph.hpp"

namespace hamsq {

// A side condition on a hamiltonian path/cycle of G^2. "G-edge" means an edge
// of the host graph G used consecutively by the sequence.
struct Constraint {
  enum class Kind {
    kGEdgeAt,               // `count` (1 or 2) G-edges at `vertex`
    kRequiredEdge,          // `edge` (a G-edge) is used
    kGEdgeOrNeighborPair,   // a G-edge at `vertex`, or an edge uv, u,v in N(vertex)
  };

  Kind kind = Kind::kGEdgeAt;
  int vertex = -1;
  int count = 1;
  Edge edge;
  // Exclusive constraints claim their edges; a non-exclusive one may reuse
  // an edge claimed elsewhere.
  bool exclusive = true;

  static Constraint g_edge_at(int x, int count = 1) {
    return {Kind::kGEdgeAt, x, count, {}, true};
  }
  static Constraint required_edge(int u, int v) {
    return {Kind::kRequiredEdge, -1, 1, Edge(u, v), true};
  }
  static Constraint g_edge_or_neighbor_pair(int y) {
    return {Kind::kGEdgeOrNeighborPair, y, 1, {}, true};
  }
  Constraint shared() const {
    Constraint c = *this;
    c.exclusive = false;
    return c;
  }

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

// Shape of the requested sequence plus its side conditions. Every edge a
// constraint claims must differ from the edges claimed by the others.
struct IncidenceSpec {
  bool closed = false;
  int from = -1;  // open paths only
  int to = -1;
  std::vector<Constraint> constraints;

  static IncidenceSpec path(int from, int to) {
    IncidenceSpec s;
    s.from = from;
    s.to = to;
    return s;
  }
  static IncidenceSpec cycle() {
    IncidenceSpec s;
    s.closed = true;
    return s;
  }
  IncidenceSpec& require(Constraint c) {
    constraints.push_back(c);
    return *this;
  }

  friend bool operator==(const IncidenceSpec&, const IncidenceSpec&) = default;
};

// Throws Error(kInvalidArgument) when the spec does not fit the host.
void check_spec(const Graph& host, const IncidenceSpec& spec);

// How one constraint was met. For kGEdgeOrNeighborPair, `neighbor_pair`
// marks the second alternative and `edges` then holds the uv edge.
struct ConstraintWitness {
  std::vector<Edge> edges;
  bool neighbor_pair = false;

  friend bool operator==(const ConstraintWitness&,
                         const ConstraintWitness&) = default;
};

// Hamiltonian path or cycle of square(host), restricted to host's vertices
// minus `omitted`.
struct HamWitness {
  Graph host;
  std::vector<int> sequence;
  bool closed = false;
  VertexSet omitted;
  IncidenceSpec spec;
  std::map<int, ConstraintWitness> satisfied;  // keyed by constraint index

  // Consecutive pairs, including the closing pair of a cycle.
  std::vector<Edge> sequence_edges() const;
};

// Re-derives every witness invariant from scratch; returns the first
// violation found.
std::optional<std::string> witness_error(const HamWitness& w);
inline bool is_valid_witness(const HamWitness& w) {
  return !witness_error(w).has_value();
}

enum class SearchStatus { kFound, kExhausted, kUndecided };

std::string to_string(SearchStatus s);

struct SearchOptions {
  std::uint64_t node_budget = 0;  // 0 means unlimited
  // Moves restricted to the square of this spanning subgraph of the host
  // (G-edge credit still comes from the host).
  std::optional<Graph> moves_within;
};

struct HamSearchResult {
  SearchStatus status = SearchStatus::kExhausted;
  std::optional<HamWitness> witness;
  std::uint64_t nodes = 0;

  bool found() const { return status == SearchStatus::kFound; }
};

// Complete backtracking search. kExhausted is only reported after the whole
// space has been explored; hitting the node budget yields kUndecided.
HamSearchResult ham_search(const Graph& host, const IncidenceSpec& spec,
                           const SearchOptions& options = {});

}  // namespace hamsq
