#include "hamsq/checkers.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "hamsq/blocks.hpp"
#include "hamsq/error.hpp"
#include "hamsq/graph6.hpp"

namespace hamsq {

std::string to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::kPass:
      return "pass";
    case ReportStatus::kFail:
      return "fail";
    case ReportStatus::kUndecided:
      return "undecided";
  }
  return "?";
}

ReportStatus PropertyReport::status() const {
  bool undecided_only = true;
  for (const Failure& f : failures) {
    if (f.status != "undecided") undecided_only = false;
  }
  if (failures.empty()) return ReportStatus::kPass;
  return undecided_only ? ReportStatus::kUndecided : ReportStatus::kFail;
}

void PropertyReport::merge(const PropertyReport& other) {
  instances += other.instances;
  checks += other.checks;
  undecided += other.undecided;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  counterexamples.insert(counterexamples.end(), other.counterexamples.begin(),
                         other.counterexamples.end());
  for (const auto& [k, v] : other.stats) stats[k] += v;
}

namespace {

void require_vertices(const Graph& g, std::span<const int> xs, const char* who) {
  VertexSet seen;
  for (int x : xs) {
    if (!g.contains_vertex(x)) {
      fail(ErrorCode::kInvalidArgument,
           std::string(who) + ": vertex " + std::to_string(x) + " out of range");
    }
    if (seen.contains(x)) {
      fail(ErrorCode::kInvalidArgument,
           std::string(who) + ": vertices must be distinct");
    }
    seen.insert(x);
  }
}

void require_2_connected(const Graph& g, const char* who) {
  if (!is_2_connected(g)) {
    fail(ErrorCode::kPrecondition, std::string(who) + ": graph is not 2-connected");
  }
}

bool inside_v2(const Graph& g, int x) {
  return g.neighbors(x).is_subset_of(v2_set(g));
}

}  // namespace

HamSearchResult check_fk(const Graph& g, std::span<const int> xs,
                         const SearchOptions& options) {
  if (xs.size() < 3) fail(ErrorCode::kInvalidArgument, "check_fk: need k >= 3");
  require_vertices(g, xs, "check_fk");
  require_2_connected(g, "check_fk");
  IncidenceSpec spec = IncidenceSpec::path(xs[0], xs[1]);
  for (std::size_t i = 2; i < xs.size(); ++i) {
    spec.require(Constraint::g_edge_at(xs[i]));
  }
  return ham_search(g, spec, options);
}

PropertyReport has_fk_property(const Graph& g, int k, const SearchOptions& options) {
  require_2_connected(g, "has_fk_property");
  if (k < 3 || k > g.order()) {
    fail(ErrorCode::kInvalidArgument, "has_fk_property: need 3 <= k <= n");
  }
  const auto t0 = std::chrono::steady_clock::now();
  PropertyReport report;
  report.property = "f" + std::to_string(k);
  report.family = "single graph";
  report.instances = 1;
  const std::string code = graph6_encode(g);
  const int n = g.order();
  std::vector<int> tuple(k);
  VertexSet used;
  bool stop = false;
  // Ordered k-tuples of distinct vertices in lexicographic order.
  auto rec = [&](auto&& self, int depth) -> void {
    if (stop) return;
    if (depth == k) {
      ++report.checks;
      const HamSearchResult r = check_fk(g, tuple, options);
      if (r.status == SearchStatus::kExhausted) {
        report.failures.push_back({code, tuple, "fail", "no witness"});
        stop = true;
      } else if (r.status == SearchStatus::kUndecided) {
        ++report.undecided;
        report.failures.push_back({code, tuple, "undecided", "node budget hit"});
      }
      return;
    }
    for (int v = 0; v < n && !stop; ++v) {
      if (used.contains(v)) continue;
      used.insert(v);
      tuple[depth] = v;
      self(self, depth + 1);
      used.erase(v);
    }
  };
  rec(rec, 0);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

HamSearchResult check_strong_f3(const Graph& g, int x1, int x2, int x3, int i,
                                const SearchOptions& options) {
  const int xs[] = {x1, x2, x3};
  require_vertices(g, xs, "check_strong_f3");
  if (i != 1 && i != 2) fail(ErrorCode::kInvalidArgument, "check_strong_f3: i must be 1 or 2");
  require_2_connected(g, "check_strong_f3");
  IncidenceSpec spec = IncidenceSpec::path(x1, x2);
  spec.require(Constraint::g_edge_at(x3));
  spec.require(Constraint::g_edge_at(i == 1 ? x1 : x2));
  return ham_search(g, spec, options);
}

HamSearchResult check_theorem2(const Graph& g, int x, int y,
                               const SearchOptions& options) {
  const int xs[] = {x, y};
  require_vertices(g, xs, "check_theorem2");
  require_2_connected(g, "check_theorem2");
  IncidenceSpec spec = IncidenceSpec::path(x, y);
  spec.require(Constraint::g_edge_at(x));
  spec.require(Constraint::g_edge_or_neighbor_pair(y));
  return ham_search(g, spec, options);
}

HamSearchResult check_endpoint_edge(const Graph& g, int x, int y, int q,
                                    const SearchOptions& options) {
  const int xs[] = {x, y};
  require_vertices(g, xs, "check_endpoint_edge");
  if (q != x && q != y) {
    fail(ErrorCode::kInvalidArgument, "check_endpoint_edge: q must be an end");
  }
  require_2_connected(g, "check_endpoint_edge");
  IncidenceSpec spec = IncidenceSpec::path(x, y);
  spec.require(Constraint::g_edge_at(q));
  return ham_search(g, spec, options);
}

HamSearchResult check_vw_ham_cycle(const Graph& g, int v, std::span<const int> ws,
                                   const SearchOptions& options) {
  std::vector<int> all{v};
  all.insert(all.end(), ws.begin(), ws.end());
  require_vertices(g, all, "check_vw_ham_cycle");
  require_2_connected(g, "check_vw_ham_cycle");
  IncidenceSpec spec = IncidenceSpec::cycle();
  spec.require(Constraint::g_edge_at(v, 2));
  for (int w : ws) spec.require(Constraint::g_edge_at(w));
  return ham_search(g, spec, options);
}

std::optional<std::array<int, 3>> fbar_triple(const Graph& g) {
  const std::vector<int> two = v2_set(g).to_vector();
  for (std::size_t a = 0; a < two.size(); ++a) {
    for (std::size_t b = a + 1; b < two.size(); ++b) {
      if (g.row(two[a]) != g.row(two[b])) continue;
      for (std::size_t c = b + 1; c < two.size(); ++c) {
        if (g.row(two[a]) == g.row(two[c])) {
          return std::array<int, 3>{two[a], two[b], two[c]};
        }
      }
    }
  }
  return std::nullopt;
}

bool apex_hypotheses(const Graph& g, int x1, int x2, int x3, int x4) {
  return !inside_v2(g, x3) && !inside_v2(g, x4) &&
         (inside_v2(g, x1) || inside_v2(g, x2));
}

HamSearchResult check_apex_hc(const Graph& g, int x1, int x2, int x3, int x4,
                              const SearchOptions& options) {
  const int xs[] = {x1, x2, x3, x4};
  require_vertices(g, xs, "check_apex_hc");
  require_2_connected(g, "check_apex_hc");
  if (!is_dt(g)) fail(ErrorCode::kPrecondition, "check_apex_hc: not a DT-graph");
  const Graph plus = augment_apex(g, x1, x2);
  const int y = g.order();
  IncidenceSpec spec = IncidenceSpec::cycle();
  spec.require(Constraint::required_edge(x1, y));
  spec.require(Constraint::required_edge(x2, y));
  spec.require(Constraint::g_edge_at(x3));
  spec.require(Constraint::g_edge_at(x4));
  return ham_search(plus, spec, options);
}

bool chain_endpoints_ok(const Graph& g, int v, int w) {
  if (!g.contains_vertex(v) || !g.contains_vertex(w) || v == w) return false;
  const auto chain = is_block_chain(g);
  if (!chain || chain->blocks.size() < 2 || g.order() < 3) return false;
  if (chain->cutvertices.contains(v) || chain->cutvertices.contains(w)) return false;
  const std::vector<int>& order = *chain->chain_order;
  const Block& first = chain->blocks[order.front()];
  const Block& last = chain->blocks[order.back()];
  return (first.vertices.contains(v) && last.vertices.contains(w)) ||
         (first.vertices.contains(w) && last.vertices.contains(v));
}

ChainWitnesses check_corollary1(const Graph& b, int v, int w,
                                const SearchOptions& options) {
  const int xs[] = {v, w};
  require_vertices(b, xs, "check_corollary1");
  if (!chain_endpoints_ok(b, v, w)) {
    fail(ErrorCode::kPrecondition,
         "check_corollary1: need a non-trivial block chain with v, w "
         "non-cutvertices in different endblocks");
  }
  const BlockDecomposition d = *is_block_chain(b);
  bool v_block_2conn = false;
  for (const Block& blk : d.blocks) {
    if (blk.vertices.contains(v)) v_block_2conn = !blk.is_bridge();
  }
  ChainWitnesses out;
  out.strengthened = v_block_2conn;
  IncidenceSpec cyc = IncidenceSpec::cycle();
  cyc.require(Constraint::g_edge_at(v, v_block_2conn ? 2 : 1));
  cyc.require(Constraint::g_edge_at(w));
  out.cycle = ham_search(b, cyc, options);
  IncidenceSpec path = IncidenceSpec::path(v, w);
  path.require(Constraint::g_edge_at(v));
  path.require(Constraint::g_edge_at(w));
  out.path = ham_search(b, path, options);
  return out;
}

HamSearchResult check_corollary2(const Graph& g, Edge e, int u, int v,
                                 const SearchOptions& options) {
  const int xs[] = {e.u, e.v, u, v};
  require_vertices(g, xs, "check_corollary2");
  require_2_connected(g, "check_corollary2");
  if (g.order() < 4) fail(ErrorCode::kPrecondition, "check_corollary2: need n >= 4");
  if (!g.has_edge(e)) {
    fail(ErrorCode::kInvalidArgument, "check_corollary2: e is not an edge");
  }
  IncidenceSpec spec = IncidenceSpec::cycle();
  spec.require(Constraint::required_edge(e.u, e.v));
  spec.require(Constraint::g_edge_at(u));
  spec.require(Constraint::g_edge_at(v));
  return ham_search(g, spec, options);
}

}  // namespace hamsq
