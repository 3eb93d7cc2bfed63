#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hamsq {

// Set of vertex indices in 0..63 backed by one machine word.
class VertexSet {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    Iterator() = default;
    explicit Iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const Iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) insert(v);
  }

  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  Iterator begin() const { return Iterator(bits_); }
  Iterator end() const { return Iterator(0); }
  std::vector<int> to_vector() const { return {begin(), end()}; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(int x) const { return u == x || v == x; }
  int other(int x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

std::string to_string(Edge e);

// Simple undirected graph on vertices 0..n-1, n <= 62. Immutable once built.
class Graph {
 public:
  static constexpr int kMaxVertices = 62;

  Graph() = default;

  // Throws Error(kInvalidArgument) on out-of-range vertices or self-loops.
  // Duplicate pairs collapse.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  // Adjacency rows must be symmetric and loop-free; checked.
  static Graph from_adjacency(std::vector<std::uint64_t> rows);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const;
  VertexSet vertices() const { return VertexSet::range(order()); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  std::uint64_t row(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

  // Edges sorted lexicographically by (u, v).
  std::vector<Edge> edges() const;

  Graph without_edge(Edge e) const;
  Graph with_edge(Edge e) const;
  // Subgraph induced on `keep`, relabelled to 0..|keep|-1 in index order.
  Graph induced(VertexSet keep) const;
  // Spanning subgraph with exactly the given edges (must be edges of *this).
  Graph spanning_subgraph(std::span<const Edge> edges) const;

  bool is_connected() const;
  bool contains_vertex(int v) const { return v >= 0 && v < order(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::vector<std::uint64_t> rows) : adj_(std::move(rows)) {}

  std::vector<std::uint64_t> adj_;
};

// Sorted, duplicate-free set of edges of some host graph.
class EdgeSet {
 public:
  EdgeSet() = default;
  // Throws if an edge is not in `host`.
  EdgeSet(const Graph& host, std::vector<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return edges_.empty(); }
  bool contains(Edge e) const;
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<Edge> edges_;
};

// Distance <= 2 closure. G is a subgraph of square(G).
Graph square(const Graph& g);

// Vertices of degree exactly two.
VertexSet v2_set(const Graph& g);

// Edges whose endpoints both have degree > 2.
EdgeSet d_set(const Graph& g);

// Every edge meets a vertex of degree two.
bool is_dt(const Graph& g);

// u itself when u is pendant, otherwise nothing.
std::optional<int> pendant_delta(const Graph& g, int u);

// Adds vertex n joined to exactly x1 and x2.
Graph augment_apex(const Graph& g, int x1, int x2);

// Common builders used by tests, the harness and the CLI.
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);

}  // namespace hamsq
