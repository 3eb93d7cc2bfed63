#pragma once

#include <optional>
#include <vector>

#include "hamsq/graph.hpp"

namespace hamsq {

// Maximal 2-connected subgraph, or a bridge.
struct Block {
  std::vector<Edge> edges;  // sorted
  VertexSet vertices;

  bool is_bridge() const { return edges.size() == 1; }
  // The block as a graph in its own right, labels preserved (other vertices
  // isolated) so degrees are block-local.
  Graph as_graph(int host_order) const;

  friend bool operator==(const Block&, const Block&) = default;
};

struct BlockDecomposition {
  std::vector<Block> blocks;  // sorted by smallest edge
  VertexSet cutvertices;
  // Present iff the block-cut tree is a path: block indices from one
  // endblock to the other, and the cutvertex shared by each consecutive pair.
  std::optional<std::vector<int>> chain_order;
  std::vector<int> chain_cutvertices;

  bool is_chain() const { return chain_order.has_value(); }
  // Blocks with at most one cutvertex.
  std::vector<int> endblocks() const;
  // Index of the block containing edge e.
  int block_of(Edge e) const;
};

// Requires a connected graph; throws Error(kPrecondition) otherwise.
BlockDecomposition blocks(const Graph& g);

// n >= 3, connected, no cutvertex.
bool is_2_connected(const Graph& g);

// Decomposition when g is connected and its block-cut tree is a path (a
// single block is a trivial chain).
std::optional<BlockDecomposition> is_block_chain(const Graph& g);

// Requires a 2-connected graph.
bool is_edge_critical(const Graph& g);

struct EdgeCriticalReduction {
  Graph reduced;
  EdgeSet removed;  // over the input graph
};

// Deletes edges in lexicographic order while the graph stays 2-connected,
// restarting the scan after every deletion.
EdgeCriticalReduction edge_critical_reduce(const Graph& g);

struct DtEndblock {
  Edge edge;      // from D(g)
  Block block;    // DT endblock of g - edge
  int cutvertex;  // block's cutvertex in g - edge
};

// First e in D(g) (lexicographic) and endblock B of g - e (chain order) such
// that B is a DT-graph, {x, y} is not inside V(B), and x in V(B) only as the
// cutvertex. Requires g edge-critical, 2-connected and not DT. Throws
// Error(kTheoremViolation) if nothing qualifies.
DtEndblock dt_endblock_edge(const Graph& g, int x, int y);

// Removes V(block) - {a, b} and every edge inside V(block), then inserts the
// path a-p-q-b. Survivors are compacted in index order; p and q take the two
// highest indices. Requires the removed vertices to have no neighbours
// outside V(block).
Graph replace_block_with_path3(const Graph& g, VertexSet block, int a, int b);

}  // namespace hamsq
