#include "hamsq/blocks.hpp"

#include <algorithm>
#include <map>

#include "hamsq/error.hpp"

namespace hamsq {

Graph Block::as_graph(int host_order) const { return Graph(host_order, edges); }

std::vector<int> BlockDecomposition::endblocks() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(blocks.size()); ++i) {
    if ((blocks[i].vertices & cutvertices).size() <= 1) out.push_back(i);
  }
  return out;
}

int BlockDecomposition::block_of(Edge e) const {
  for (int i = 0; i < static_cast<int>(blocks.size()); ++i) {
    if (std::binary_search(blocks[i].edges.begin(), blocks[i].edges.end(), e)) {
      return i;
    }
  }
  return -1;
}

namespace {

// Hopcroft-Tarjan over edges; blocks are popped off an edge stack.
class BiconnectedSearch {
 public:
  explicit BiconnectedSearch(const Graph& g)
      : g_(g), depth_(g.order(), -1), low_(g.order(), 0) {}

  void run() {
    if (g_.order() == 0) return;
    visit(0, -1, 0);
  }

  std::vector<Block> take_blocks() { return std::move(blocks_); }
  VertexSet cutvertices() const { return cut_; }

 private:
  void visit(int v, int parent, int d) {
    depth_[v] = low_[v] = d;
    int children = 0;
    for (int u : g_.neighbors(v)) {
      if (u == parent) continue;
      if (depth_[u] < 0) {
        stack_.emplace_back(v, u);
        ++children;
        visit(u, v, d + 1);
        low_[v] = std::min(low_[v], low_[u]);
        if (low_[u] >= depth_[v]) {
          if (parent >= 0 || children > 1) cut_.insert(v);
          pop_block(Edge(v, u));
        }
      } else if (depth_[u] < depth_[v]) {
        stack_.emplace_back(v, u);
        low_[v] = std::min(low_[v], depth_[u]);
      }
    }
  }

  void pop_block(Edge until) {
    Block b;
    while (true) {
      Edge e = stack_.back();
      stack_.pop_back();
      b.edges.push_back(e);
      b.vertices.insert(e.u);
      b.vertices.insert(e.v);
      if (e == until) break;
    }
    std::sort(b.edges.begin(), b.edges.end());
    blocks_.push_back(std::move(b));
  }

  const Graph& g_;
  std::vector<int> depth_;
  std::vector<int> low_;
  std::vector<Edge> stack_;
  std::vector<Block> blocks_;
  VertexSet cut_;
};

void fill_chain(BlockDecomposition& d) {
  const int k = static_cast<int>(d.blocks.size());
  if (k == 0) return;
  std::map<int, std::vector<int>> blocks_at;
  for (int i = 0; i < k; ++i) {
    VertexSet cuts = d.blocks[i].vertices & d.cutvertices;
    if (cuts.size() > 2) return;
    for (int c : cuts) blocks_at[c].push_back(i);
  }
  for (const auto& [c, list] : blocks_at) {
    if (list.size() != 2) return;
  }
  std::vector<int> order;
  std::vector<int> shared;
  int current = d.endblocks().front();
  int via = -1;
  while (true) {
    order.push_back(current);
    int next = -1;
    for (int c : d.blocks[current].vertices & d.cutvertices) {
      if (c == via) continue;
      const auto& list = blocks_at[c];
      next = list[0] == current ? list[1] : list[0];
      via = c;
      break;
    }
    if (next < 0) break;
    shared.push_back(via);
    current = next;
  }
  d.chain_order = std::move(order);
  d.chain_cutvertices = std::move(shared);
}

bool is_dt_block(const Block& b, int host_order) {
  return is_dt(b.as_graph(host_order));
}

}  // namespace

BlockDecomposition blocks(const Graph& g) {
  if (!g.is_connected()) {
    fail(ErrorCode::kPrecondition, "blocks: graph is not connected");
  }
  BiconnectedSearch search(g);
  search.run();
  BlockDecomposition d;
  d.blocks = search.take_blocks();
  std::sort(d.blocks.begin(), d.blocks.end(),
            [](const Block& a, const Block& b) { return a.edges < b.edges; });
  d.cutvertices = search.cutvertices();
  fill_chain(d);
  return d;
}

bool is_2_connected(const Graph& g) {
  if (g.order() < 3 || !g.is_connected()) return false;
  return blocks(g).cutvertices.empty();
}

std::optional<BlockDecomposition> is_block_chain(const Graph& g) {
  if (g.order() < 2 || !g.is_connected()) return std::nullopt;
  BlockDecomposition d = blocks(g);
  if (!d.is_chain()) return std::nullopt;
  return d;
}

bool is_edge_critical(const Graph& g) {
  if (!is_2_connected(g)) {
    fail(ErrorCode::kPrecondition, "is_edge_critical: graph not 2-connected");
  }
  for (Edge e : g.edges()) {
    if (is_2_connected(g.without_edge(e))) return false;
  }
  return true;
}

EdgeCriticalReduction edge_critical_reduce(const Graph& g) {
  if (!is_2_connected(g)) {
    fail(ErrorCode::kPrecondition,
         "edge_critical_reduce: graph not 2-connected");
  }
  Graph current = g;
  std::vector<Edge> removed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Edge e : current.edges()) {
      Graph candidate = current.without_edge(e);
      if (is_2_connected(candidate)) {
        current = std::move(candidate);
        removed.push_back(e);
        changed = true;
        break;
      }
    }
  }
  return {std::move(current), EdgeSet(g, std::move(removed))};
}

DtEndblock dt_endblock_edge(const Graph& g, int x, int y) {
  if (!g.contains_vertex(x) || !g.contains_vertex(y) || x == y) {
    fail(ErrorCode::kInvalidArgument,
         "dt_endblock_edge: x, y must be distinct vertices");
  }
  if (!is_2_connected(g) || !is_edge_critical(g)) {
    fail(ErrorCode::kPrecondition,
         "dt_endblock_edge: graph must be an edge-critical block");
  }
  const EdgeSet d = d_set(g);
  if (d.empty()) {
    fail(ErrorCode::kPrecondition, "dt_endblock_edge: D(G) is empty");
  }
  for (Edge e : d) {
    const Graph rest = g.without_edge(e);
    std::optional<BlockDecomposition> chain = is_block_chain(rest);
    if (!chain || chain->blocks.size() < 2) continue;
    const std::vector<int>& order = *chain->chain_order;
    for (int idx : {order.front(), order.back()}) {
      const Block& b = chain->blocks[idx];
      if (!is_dt_block(b, g.order())) continue;
      if (b.vertices.contains(x) && b.vertices.contains(y)) continue;
      if (b.vertices.contains(x) && !chain->cutvertices.contains(x)) continue;
      const VertexSet cuts = b.vertices & chain->cutvertices;
      return {e, b, *cuts.begin()};
    }
  }
  fail(ErrorCode::kTheoremViolation,
       "dt_endblock_edge: no edge of D(G) yields a qualifying DT endblock");
}

Graph replace_block_with_path3(const Graph& g, VertexSet block, int a, int b) {
  if (!block.is_subset_of(g.vertices())) {
    fail(ErrorCode::kInvalidArgument, "replace_block_with_path3: bad block");
  }
  if (a == b || !block.contains(a) || !block.contains(b)) {
    fail(ErrorCode::kInvalidArgument,
         "replace_block_with_path3: attachments must be distinct vertices of "
         "the block");
  }
  const VertexSet removed = block - VertexSet{a, b};
  for (int v : removed) {
    if (!g.neighbors(v).is_subset_of(block)) {
      fail(ErrorCode::kPrecondition,
           "replace_block_with_path3: vertex " + std::to_string(v) +
               " has neighbours outside the block");
    }
  }
  const VertexSet keep = g.vertices() - removed;
  std::vector<int> index(g.order(), -1);
  int next = 0;
  for (int v : keep) index[v] = next++;
  std::vector<Edge> edges;
  for (Edge e : g.edges()) {
    if (block.contains(e.u) && block.contains(e.v)) continue;
    if (removed.contains(e.u) || removed.contains(e.v)) continue;
    edges.emplace_back(index[e.u], index[e.v]);
  }
  const int p = next;
  const int q = next + 1;
  edges.emplace_back(index[a], p);
  edges.emplace_back(p, q);
  edges.emplace_back(q, index[b]);
  return Graph(next + 2, edges);
}

}  // namespace hamsq
