#include "hamsq/graph.hpp"

#include <algorithm>

#include "hamsq/error.hpp"

namespace hamsq {

std::string to_string(Edge e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

namespace {

void check_order(int n) {
  if (n < 0 || n > Graph::kMaxVertices) {
    fail(ErrorCode::kInvalidArgument,
         "vertex count " + std::to_string(n) + " outside 0.." +
             std::to_string(Graph::kMaxVertices));
  }
}

std::vector<std::uint64_t> rows_from_pairs(int n, std::span<const Edge> edges) {
  check_order(n);
  std::vector<std::uint64_t> rows(n, 0);
  for (Edge e : edges) {
    if (e.u < 0 || e.v >= n) {
      fail(ErrorCode::kInvalidArgument,
           "edge " + to_string(e) + " out of range for n=" + std::to_string(n));
    }
    if (e.u == e.v) {
      fail(ErrorCode::kInvalidArgument,
           "self-loop at vertex " + std::to_string(e.u));
    }
    rows[e.u] |= std::uint64_t{1} << e.v;
    rows[e.v] |= std::uint64_t{1} << e.u;
  }
  return rows;
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges)
    : adj_(rows_from_pairs(n, edges)) {}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> list;
  for (auto [a, b] : edges) {
    if (a == b) {
      fail(ErrorCode::kInvalidArgument,
           "self-loop at vertex " + std::to_string(a));
    }
    list.emplace_back(a, b);
  }
  adj_ = rows_from_pairs(n, list);
}

Graph Graph::from_adjacency(std::vector<std::uint64_t> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const std::uint64_t all = VertexSet::range(n).bits();
  for (int v = 0; v < n; ++v) {
    if ((rows[v] & ~all) != 0 || ((rows[v] >> v) & 1U)) {
      fail(ErrorCode::kInvalidArgument,
           "adjacency row " + std::to_string(v) + " invalid");
    }
    for (int u : VertexSet(rows[v])) {
      if (!((rows[u] >> v) & 1U)) {
        fail(ErrorCode::kInvalidArgument, "adjacency not symmetric");
      }
    }
  }
  return Graph(std::move(rows));
}

int Graph::size() const {
  int twice = 0;
  for (std::uint64_t r : adj_) twice += std::popcount(r);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : VertexSet(adj_[u] & ~VertexSet::range(u + 1).bits())) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::without_edge(Edge e) const {
  std::vector<std::uint64_t> rows = adj_;
  rows[e.u] &= ~(std::uint64_t{1} << e.v);
  rows[e.v] &= ~(std::uint64_t{1} << e.u);
  return Graph(std::move(rows));
}

Graph Graph::with_edge(Edge e) const {
  if (e.u == e.v || !contains_vertex(e.u) || !contains_vertex(e.v)) {
    fail(ErrorCode::kInvalidArgument, "cannot add edge " + to_string(e));
  }
  std::vector<std::uint64_t> rows = adj_;
  rows[e.u] |= std::uint64_t{1} << e.v;
  rows[e.v] |= std::uint64_t{1} << e.u;
  return Graph(std::move(rows));
}

Graph Graph::induced(VertexSet keep) const {
  std::vector<int> index(order(), -1);
  int next = 0;
  for (int v : keep) index[v] = next++;
  std::vector<std::uint64_t> rows(next, 0);
  for (int v : keep) {
    for (int u : VertexSet(adj_[v]) & keep) {
      rows[index[v]] |= std::uint64_t{1} << index[u];
    }
  }
  return Graph(std::move(rows));
}

Graph Graph::spanning_subgraph(std::span<const Edge> edges) const {
  std::vector<std::uint64_t> rows(order(), 0);
  for (Edge e : edges) {
    if (!has_edge(e)) {
      fail(ErrorCode::kInvalidArgument,
           "edge " + to_string(e) + " not in host graph");
    }
    rows[e.u] |= std::uint64_t{1} << e.v;
    rows[e.v] |= std::uint64_t{1} << e.u;
  }
  return Graph(std::move(rows));
}

bool Graph::is_connected() const {
  if (order() <= 1) return true;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (int v : VertexSet(frontier)) next |= adj_[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == vertices().bits();
}

EdgeSet::EdgeSet(const Graph& host, std::vector<Edge> edges)
    : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (Edge e : edges_) {
    if (!host.contains_vertex(e.v) || e.u < 0 || !host.has_edge(e)) {
      fail(ErrorCode::kInvalidArgument,
           "edge " + to_string(e) + " not in host graph");
    }
  }
}

bool EdgeSet::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

Graph square(const Graph& g) {
  std::vector<std::uint64_t> rows(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) {
    std::uint64_t reach = g.row(v);
    for (int u : g.neighbors(v)) reach |= g.row(u);
    rows[v] = reach & ~(std::uint64_t{1} << v);
  }
  return Graph::from_adjacency(std::move(rows));
}

VertexSet v2_set(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 2) out.insert(v);
  }
  return out;
}

EdgeSet d_set(const Graph& g) {
  std::vector<Edge> out;
  for (Edge e : g.edges()) {
    if (g.degree(e.u) > 2 && g.degree(e.v) > 2) out.push_back(e);
  }
  return EdgeSet(g, std::move(out));
}

bool is_dt(const Graph& g) { return d_set(g).empty(); }

std::optional<int> pendant_delta(const Graph& g, int u) {
  if (!g.contains_vertex(u)) {
    fail(ErrorCode::kInvalidArgument, "vertex out of range");
  }
  if (g.degree(u) == 1) return u;
  return std::nullopt;
}

Graph augment_apex(const Graph& g, int x1, int x2) {
  if (!g.contains_vertex(x1) || !g.contains_vertex(x2)) {
    fail(ErrorCode::kInvalidArgument, "apex attachment out of range");
  }
  if (x1 == x2) {
    fail(ErrorCode::kInvalidArgument, "apex attachments must be distinct");
  }
  std::vector<Edge> edges = g.edges();
  const int y = g.order();
  edges.emplace_back(x1, y);
  edges.emplace_back(x2, y);
  return Graph(y + 1, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) fail(ErrorCode::kInvalidArgument, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < a + b; ++v) edges.emplace_back(u, v);
  }
  return Graph(a + b, edges);
}

}  // namespace hamsq
