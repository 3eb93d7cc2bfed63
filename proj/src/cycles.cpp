#include "hamsq/cycles.hpp"

#include "hamsq/error.hpp"

namespace hamsq {

bool is_cycle_of(const Graph& g, const Cycle& c) {
  if (c.size() < 3) return false;
  VertexSet seen;
  for (int v : c) {
    if (!g.contains_vertex(v) || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
  }
  return true;
}

std::vector<Edge> cycle_edges(const Cycle& c) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    out.emplace_back(c[i], c[(i + 1) % c.size()]);
  }
  return out;
}

namespace {

struct CycleWalker {
  const Graph& g;
  int start;
  std::uint64_t allowed;
  const std::function<bool(const Cycle&)>& visit;
  Cycle path;
  std::uint64_t on_path = 0;

  // Returns false to stop the whole walk.
  bool walk(int v) {
    for (int u : VertexSet(g.row(v) & allowed)) {
      if (u == start) {
        if (path.size() >= 3 && path[1] < path.back() && !visit(path)) {
          return false;
        }
        continue;
      }
      if ((on_path >> u) & 1U) continue;
      path.push_back(u);
      on_path |= std::uint64_t{1} << u;
      const bool go_on = walk(u);
      on_path &= ~(std::uint64_t{1} << u);
      path.pop_back();
      if (!go_on) return false;
    }
    return true;
  }
};

bool find_through(const Graph& g, int start, VertexSet required, Cycle& path,
                  std::uint64_t& on_path) {
  const int v = path.back();
  for (int u : g.neighbors(v)) {
    if (u == start) {
      if (path.size() >= 3 && required.is_subset_of(VertexSet(on_path))) {
        return true;
      }
      continue;
    }
    if ((on_path >> u) & 1U) continue;
    path.push_back(u);
    on_path |= std::uint64_t{1} << u;
    if (find_through(g, start, required, path, on_path)) return true;
    on_path &= ~(std::uint64_t{1} << u);
    path.pop_back();
  }
  return false;
}

}  // namespace

void for_each_cycle(const Graph& g,
                    const std::function<bool(const Cycle&)>& visit) {
  for (int s = 0; s < g.order(); ++s) {
    const std::uint64_t allowed =
        g.vertices().bits() & ~VertexSet::range(s).bits();
    CycleWalker walker{g, s, allowed, visit, {s}, std::uint64_t{1} << s};
    if (!walker.walk(s)) return;
  }
}

std::optional<Cycle> find_cycle_through(const Graph& g, VertexSet required) {
  if (required.empty() || !required.is_subset_of(g.vertices())) {
    fail(ErrorCode::kInvalidArgument, "find_cycle_through: bad vertex set");
  }
  const int start = *required.begin();
  Cycle path{start};
  std::uint64_t on_path = std::uint64_t{1} << start;
  if (find_through(g, start, required, path, on_path)) return path;
  return std::nullopt;
}

}  // namespace hamsq
