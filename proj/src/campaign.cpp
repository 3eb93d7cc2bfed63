#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "hamsq/blocks.hpp"
#include "hamsq/checkers.hpp"
#include "hamsq/cycles.hpp"
#include "hamsq/enumerate.hpp"
#include "hamsq/eps.hpp"
#include "hamsq/error.hpp"
#include "hamsq/graph6.hpp"
#include "hamsq/harness.hpp"

namespace hamsq {

Graph build_k2m(int k, bool* flagged) {
  if (k < 4) fail(ErrorCode::kInvalidArgument, "build_k2m: need k >= 4");
  if (flagged != nullptr) *flagged = k < 5;
  return complete_bipartite(2, k - 2);
}

HExample build_h_example(int n, int k) {
  if (k < 5 || n < k + 3) {
    fail(ErrorCode::kInvalidArgument, "build_h_example: need k >= 5 and n >= k + 3");
  }
  if (n + 1 > Graph::kMaxVertices) {
    fail(ErrorCode::kInvalidArgument, "build_h_example: too many vertices");
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  edges.emplace_back(n, 0);
  edges.emplace_back(n, k - 1);
  return {Graph(n + 1, edges), n, 0, k - 1};
}

namespace {

std::string tuple_text(const std::vector<int>& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(t[i]);
  }
  return s;
}

std::string cycle_text(const Cycle& c) {
  std::string s = "cycle ";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) s += '-';
    s += std::to_string(c[i]);
  }
  return s;
}

// Append-only TSV: graph6, property, tuple, status.
class ResultsCache {
 public:
  explicit ResultsCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      const auto cut = line.rfind('\t');
      if (cut == std::string::npos) continue;
      entries_[line.substr(0, cut)] = line.substr(cut + 1);
    }
  }

  std::optional<std::string> lookup(const std::string& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void record(const std::string& key, const std::string& status) {
    std::lock_guard<std::mutex> lock(mu_);
    if (!entries_.emplace(key, status).second) return;
    std::ofstream out(path_, std::ios::app);
    out << key << '\t' << status << '\n';
  }

 private:
  std::string path_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, std::string> entries_;
};

enum class Outcome { kPass, kFail, kUndecided };

struct Verdict {
  Outcome outcome = Outcome::kPass;
  std::string detail;
};

Verdict from_search(const HamSearchResult& r) {
  switch (r.status) {
    case SearchStatus::kFound:
      if (auto e = witness_error(*r.witness)) return {Outcome::kFail, "invalid witness: " + *e};
      return {Outcome::kPass, ""};
    case SearchStatus::kExhausted:
      return {Outcome::kFail, "no witness exists"};
    case SearchStatus::kUndecided:
      return {Outcome::kUndecided, "node budget hit"};
  }
  return {Outcome::kFail, "?"};
}

// Expected negatives: exhaustion confirms the counterexample.
Verdict expect_empty(const HamSearchResult& r) {
  switch (r.status) {
    case SearchStatus::kFound:
      return {Outcome::kFail, "unexpected witness found"};
    case SearchStatus::kExhausted:
      return {Outcome::kPass, "exhausted"};
    case SearchStatus::kUndecided:
      return {Outcome::kUndecided, "node budget hit"};
  }
  return {Outcome::kFail, "?"};
}

struct Context {
  std::string property;
  SearchOptions search;
  ResultsCache* cache = nullptr;
};

// Partial report for one instance.
class Tally {
 public:
  Tally(const Context& ctx, const Graph& g)
      : ctx_(ctx), g6_(graph6_encode(g)) {
    report.instances = 1;
  }

  // Runs one check through the cache. `part` separates sub-statements that
  // share tuple shapes.
  void check(const std::vector<int>& tuple, const std::function<Verdict()>& fn,
             const std::string& part = "", bool negative = false) {
    ++report.checks;
    const std::string prop = part.empty() ? ctx_.property : ctx_.property + "/" + part;
    const std::string key = g6_ + '\t' + prop + '\t' + tuple_text(tuple);
    Verdict v;
    bool cached = false;
    if (ctx_.cache != nullptr) {
      if (auto hit = ctx_.cache->lookup(key)) {
        cached = true;
        ++report.stats["cache_hits"];
        v.outcome = *hit == "pass" ? Outcome::kPass : Outcome::kFail;
        v.detail = "cached";
      }
    }
    if (!cached) {
      try {
        v = fn();
      } catch (const Error& e) {
        v = {Outcome::kFail, e.what()};
      }
      if (ctx_.cache != nullptr && v.outcome != Outcome::kUndecided) {
        ctx_.cache->record(key, v.outcome == Outcome::kPass ? "pass" : "fail");
      }
    }
    add(tuple, v, part, negative);
  }

  // Same bookkeeping without the cache (tuples that do not identify the
  // instance on their own).
  void add(const std::vector<int>& tuple, const Verdict& v, const std::string& part = "",
           bool negative = false) {
    const std::string detail = part.empty() ? v.detail : "(" + part + ") " + v.detail;
    switch (v.outcome) {
      case Outcome::kPass:
        if (negative) report.counterexamples.push_back({g6_, tuple, "fail", detail});
        break;
      case Outcome::kFail:
        report.failures.push_back({g6_, tuple, "fail", detail});
        break;
      case Outcome::kUndecided:
        ++report.undecided;
        report.failures.push_back({g6_, tuple, "undecided", detail});
        break;
    }
  }

  void stat(const std::string& name, std::uint64_t by = 1) { report.stats[name] += by; }

  PropertyReport report;

 private:
  const Context& ctx_;
  std::string g6_;
};

void for_each_tuple(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> t(k);
  std::uint64_t used = 0;
  std::function<void(int)> rec = [&](int depth) {
    if (depth == k) {
      fn(t);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1U) continue;
      used |= std::uint64_t{1} << v;
      t[depth] = v;
      rec(depth + 1);
      used &= ~(std::uint64_t{1} << v);
    }
  };
  rec(0);
}

bool inside_v2(const Graph& g, int x) { return g.neighbors(x).is_subset_of(v2_set(g)); }

int forest_deg(const EpsDecomposition& s, int v) { return forest_degree(s.forest, v); }

// ---- per-instance checks -------------------------------------------------

void f4_all_tuples(const Graph& g, Tally& t, const Context& ctx) {
  for_each_tuple(g.order(), 4, [&](const std::vector<int>& x) {
    t.check(x, [&] { return from_search(check_fk(g, x, ctx.search)); });
  });
}

void strong_f3_all(const Graph& g, Tally& t, const Context& ctx) {
  for_each_tuple(g.order(), 3, [&](const std::vector<int>& x) {
    for (int i : {1, 2}) {
      t.check({x[0], x[1], x[2], i}, [&] {
        return from_search(check_strong_f3(g, x[0], x[1], x[2], i, ctx.search));
      });
    }
  });
}

void endpoint_paths(const Graph& g, Tally& t, const Context& ctx) {
  for_each_tuple(g.order(), 2, [&](const std::vector<int>& x) {
    t.check(x, [&] {
      const HamSearchResult r = check_theorem2(g, x[0], x[1], ctx.search);
      if (r.witness) {
        t.stat(r.witness->satisfied.at(1).neighbor_pair ? "branch_neighbor_pair"
                                                         : "branch_g_edge_at_y");
      }
      return from_search(r);
    });
  });
}

void dichotomy(const Graph& g, Tally& t, const Context&) {
  const int n = g.order();
  for (int v = 0; v < n; ++v) {
    for (int w = v + 1; w < n; ++w) {
      t.check({v, w}, [&]() -> Verdict {
        const EpsOrJeps r = theorem_a(g, v, w);
        if (const auto* eps = std::get_if<EpsDecomposition>(&r)) {
          t.stat("eps_branch");
          if (auto e = eps_error(*eps)) return {Outcome::kFail, "invalid EPS: " + *e};
          if (forest_deg(*eps, v) != 0 || forest_deg(*eps, w) != 0) {
            return {Outcome::kFail, "forest touches v or w"};
          }
          return {};
        }
        const auto& jeps = std::get<JepsDecomposition>(r);
        t.stat("jeps_branch");
        if (auto e = jeps_error(jeps)) return {Outcome::kFail, "invalid JEPS: " + *e};
        if (jeps.from != v || jeps.to != w || forest_degree(jeps.forest, v) != 0 ||
            forest_degree(jeps.forest, w) != 0) {
          return {Outcome::kFail, "JEPS end conditions violated"};
        }
        return {};
      });
    }
  }
}

Verdict eps_verdict(const EpsResult& r, int root, const std::vector<int>& light,
                    const Cycle& k) {
  if (r.status == SearchStatus::kUndecided) return {Outcome::kUndecided, "node budget hit"};
  if (!r.eps) return {Outcome::kFail, "no EPS with " + cycle_text(k)};
  if (auto e = eps_error(*r.eps)) return {Outcome::kFail, "invalid EPS: " + *e};
  if (forest_deg(*r.eps, root) != 0) return {Outcome::kFail, "forest touches root"};
  for (int w : light) {
    if (forest_deg(*r.eps, w) > 1) return {Outcome::kFail, "light vertex saturated"};
  }
  for (Edge e : cycle_edges(k)) {
    if (!r.eps->eul.contains(e)) return {Outcome::kFail, "cycle not in eulerian part"};
  }
  return {};
}

struct CycleInfo {
  Cycle cycle;
  std::uint64_t mask = 0;
};

std::vector<CycleInfo> all_cycles(const Graph& g) {
  std::vector<CycleInfo> out;
  for_each_cycle(g, [&](const Cycle& c) {
    std::uint64_t m = 0;
    for (int v : c) m |= std::uint64_t{1} << v;
    out.push_back({c, m});
    return true;
  });
  return out;
}

// [v; K - v]-EPS with K in the eulerian part; covers every light subset.
bool superset_ok(const Graph& g, const CycleInfo& k, int v, const Context& ctx,
                 Tally& t) {
  EpsRequest req;
  req.root = v;
  for (int u : k.cycle) {
    if (u != v) req.light.push_back(u);
  }
  req.required_cycle = k.cycle;
  const bool ok = eps_verdict(find_eps(g, req, {ctx.search.node_budget}), v, req.light,
                              k.cycle).outcome == Outcome::kPass;
  t.stat(ok ? "superset_hits" : "superset_misses");
  return ok;
}

Verdict eps_with(const Graph& g, int root, std::vector<int> light, const Cycle& k,
                 const Context& ctx) {
  EpsRequest req;
  req.root = root;
  req.light = light;
  req.required_cycle = k;
  Verdict v = eps_verdict(find_eps(g, req, {ctx.search.node_budget}), root, light, k);
  if (v.outcome != Outcome::kPass && v.detail.find("cycle") == std::string::npos) {
    v.detail += " (" + cycle_text(k) + ")";
  }
  return v;
}

void eps_prescribed_cycle(const Graph& g, Tally& t, const Context& ctx) {
  for (const CycleInfo& k : all_cycles(g)) {
    if (k.cycle.size() < 4) continue;
    for (int v : k.cycle) {
      std::vector<int> rest;
      for (int u : k.cycle) {
        if (u != v) rest.push_back(u);
      }
      const bool all = superset_ok(g, k, v, ctx, t);
      const int m = static_cast<int>(rest.size());
      for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
          for (int c = b + 1; c < m; ++c) {
            const std::vector<int> tuple{v, rest[a], rest[b], rest[c]};
            ++t.report.checks;
            if (all) continue;
            t.add(tuple, eps_with(g, v, {rest[a], rest[b], rest[c]}, k.cycle, ctx));
          }
        }
      }
    }
  }
}

void eps_maximal_cycle(const Graph& g, Tally& t, const Context& ctx) {
  const std::vector<CycleInfo> cycles = all_cycles(g);
  const int n = g.order();
  auto triple_on_cycle = [&](std::uint64_t m) {
    return std::any_of(cycles.begin(), cycles.end(),
                       [&](const CycleInfo& c) { return (c.mask & m) == m; });
  };
  // w2 on K: every ordered (w1, w2) inside K - v.
  for (const CycleInfo& k : cycles) {
    for (int v : k.cycle) {
      const bool all = superset_ok(g, k, v, ctx, t);
      for (int w1 : k.cycle) {
        for (int w2 : k.cycle) {
          if (w1 == v || w2 == v || w1 == w2) continue;
          ++t.report.checks;
          if (!all) t.add({v, w1, w2}, eps_with(g, v, {w1, w2}, k.cycle, ctx));
        }
      }
    }
  }
  // No cycle through all three: every cycle through v, w1 is maximal.
  for_each_tuple(n, 3, [&](const std::vector<int>& x) {
    const std::uint64_t m = (std::uint64_t{1} << x[0]) | (std::uint64_t{1} << x[1]) |
                            (std::uint64_t{1} << x[2]);
    if (triple_on_cycle(m)) return;
    t.stat("triples_without_cycle");
    const std::uint64_t need = (std::uint64_t{1} << x[0]) | (std::uint64_t{1} << x[1]);
    for (const CycleInfo& k : cycles) {
      if ((k.mask & need) != need) continue;
      ++t.report.checks;
      t.add(x, eps_with(g, x[0], {x[1], x[2]}, k.cycle, ctx));
    }
  });
  // The library's own choice of maximal cycle must satisfy the definition.
  for_each_tuple(n, 3, [&](const std::vector<int>& x) {
    const Cycle k = maximal_cycle(g, x[0], x[1], x[2]);
    std::uint64_t m = 0;
    for (int u : k) m |= std::uint64_t{1} << u;
    const bool has_all = (m >> x[2]) & 1U;
    const std::uint64_t three = (std::uint64_t{1} << x[0]) | (std::uint64_t{1} << x[1]) |
                                (std::uint64_t{1} << x[2]);
    if (!is_cycle_of(g, k) || !((m >> x[0]) & 1U) || !((m >> x[1]) & 1U) ||
        (!has_all && triple_on_cycle(three))) {
      t.add(x, {Outcome::kFail, "maximal_cycle returned a non-maximal " + cycle_text(k)},
            "maximal-cycle");
    }
  });
}

void eps_vw(const Graph& g, Tally& t, const Context& ctx) {
  for (const CycleInfo& k : all_cycles(g)) {
    for (int v : k.cycle) {
      const bool all = superset_ok(g, k, v, ctx, t);
      for (int w : k.cycle) {
        if (w == v) continue;
        ++t.report.checks;
        if (!all) t.add({v, w}, eps_with(g, v, {w}, k.cycle, ctx));
      }
    }
  }
}

void chain_eps(const Graph& g, Tally& t, const Context& ctx) {
  const BlockDecomposition d = *is_block_chain(g);
  const int n = g.order();
  const EpsSearchOptions eopt{ctx.search.node_budget};
  for_each_tuple(n, 2, [&](const std::vector<int>& x) {
    const int v = x[0];
    const int w = x[1];
    if (!chain_endpoints_ok(g, v, w)) return;
    bool v_2conn = false;
    for (const Block& b : d.blocks) {
      if (b.vertices.contains(v)) v_2conn = !b.is_bridge();
    }
    t.check({v, w}, [&]() -> Verdict {
      EpsRequest req;
      if (v_2conn) {
        req.root = v;
        req.light = {w};
      } else {
        req.light = {v, w};
      }
      const EpsResult r = find_eps(g, req, eopt);
      if (r.status == SearchStatus::kUndecided) return {Outcome::kUndecided, "node budget hit"};
      if (!r.eps) return {Outcome::kFail, "no EPS"};
      if (auto e = eps_error(*r.eps)) return {Outcome::kFail, "invalid EPS: " + *e};
      if (forest_deg(*r.eps, v) > (v_2conn ? 0 : 1) || forest_deg(*r.eps, w) > 1) {
        return {Outcome::kFail, "forest degree bound violated"};
      }
      return {};
    }, "i");
    t.check({v, w}, [&]() -> Verdict {
      const int ends[] = {v, w};
      const JepsResult r = find_jeps(g, v, w, ends, eopt);
      if (r.status == SearchStatus::kUndecided) return {Outcome::kUndecided, "node budget hit"};
      if (!r.jeps) return {Outcome::kFail, "no JEPS"};
      if (auto e = jeps_error(*r.jeps)) return {Outcome::kFail, "invalid JEPS: " + *e};
      if (forest_degree(r.jeps->forest, v) != 0 || forest_degree(r.jeps->forest, w) != 0) {
        return {Outcome::kFail, "forest touches a trail end"};
      }
      // Refinement: at most one cutvertex with forest degree 2.
      EpsConstraints c;
      c.odd = VertexSet{v, w};
      c.no_forest = VertexSet{v, w};
      c.single_saturated = d.cutvertices;
      const ColouringResult refined = search_colouring(g, c, eopt);
      t.stat(refined.colouring ? "refinement_holds" : "refinement_missing");
      return {};
    }, "ii");
  });
}

void chain_paths_cycles(const Graph& g, Tally& t, const Context& ctx) {
  for_each_tuple(g.order(), 2, [&](const std::vector<int>& x) {
    if (!chain_endpoints_ok(g, x[0], x[1])) return;
    t.check(x, [&]() -> Verdict {
      const ChainWitnesses r = check_corollary1(g, x[0], x[1], ctx.search);
      if (r.strengthened) t.stat("two_edges_at_v");
      Verdict c = from_search(r.cycle);
      if (c.outcome != Outcome::kPass) {
        c.detail = "cycle: " + c.detail;
        return c;
      }
      Verdict p = from_search(r.path);
      if (p.outcome != Outcome::kPass) p.detail = "path: " + p.detail;
      return p;
    });
  });
}

void vw1w2_cycles(const Graph& g, Tally& t, const Context& ctx) {
  for_each_tuple(g.order(), 3, [&](const std::vector<int>& x) {
    if (!inside_v2(g, x[0]) || !inside_v2(g, x[1])) return;
    t.check(x, [&] {
      const int ws[] = {x[1], x[2]};
      return from_search(check_vw_ham_cycle(g, x[0], ws, ctx.search));
    });
  });
}

void vw_cycles(const Graph& g, Tally& t, const Context& ctx) {
  for_each_tuple(g.order(), 2, [&](const std::vector<int>& x) {
    t.check(x, [&] {
      const int ws[] = {x[1]};
      return from_search(check_vw_ham_cycle(g, x[0], ws, ctx.search));
    });
  });
}

void f3_edge_paths(const Graph& g, Tally& t, const Context& ctx) {
  for_each_tuple(g.order(), 3, [&](const std::vector<int>& x) {
    t.check(x, [&] { return from_search(check_fk(g, x, ctx.search)); }, "i");
  });
  for_each_tuple(g.order(), 2, [&](const std::vector<int>& x) {
    for (int q : x) {
      t.check({x[0], x[1], q}, [&] {
        return from_search(check_endpoint_edge(g, x[0], x[1], q, ctx.search));
      }, "ii");
    }
  });
}

void dt_endblock_edges(const Graph& g, Tally& t, const Context&) {
  const EdgeSet d = d_set(g);
  for_each_tuple(g.order(), 2, [&](const std::vector<int>& x) {
    t.check(x, [&]() -> Verdict {
      const DtEndblock r = dt_endblock_edge(g, x[0], x[1]);
      if (!d.contains(r.edge)) return {Outcome::kFail, "edge not in D(G)"};
      const Graph h = g.without_edge(r.edge);
      const auto chain = is_block_chain(h);
      if (!chain || chain->blocks.size() < 2) return {Outcome::kFail, "G - e is not a block chain"};
      const auto ends = chain->endblocks();
      const bool is_end = std::any_of(ends.begin(), ends.end(), [&](int i) {
        return chain->blocks[i] == r.block;
      });
      if (!is_end) return {Outcome::kFail, "block is not an endblock"};
      if (!is_dt(r.block.as_graph(g.order()))) return {Outcome::kFail, "endblock is not DT"};
      if (r.block.vertices.contains(x[0]) && r.block.vertices.contains(x[1])) {
        return {Outcome::kFail, "endblock contains both x and y"};
      }
      if (r.block.vertices.contains(x[0]) && !chain->cutvertices.contains(x[0])) {
        return {Outcome::kFail, "x inside the endblock but not a cutvertex"};
      }
      if (!r.block.vertices.contains(r.cutvertex) || !chain->cutvertices.contains(r.cutvertex)) {
        return {Outcome::kFail, "reported cutvertex is wrong"};
      }
      return {};
    });
  });
}

void edge_two_vertices(const Graph& g, Tally& t, const Context& ctx) {
  const int n = g.order();
  for (Edge e : g.edges()) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (e.touches(u) || e.touches(v)) continue;
        t.check({e.u, e.v, u, v}, [&] {
          return from_search(check_corollary2(g, e, u, v, ctx.search));
        });
      }
    }
  }
}

void apex_cycles(const Graph& g, Tally& t, const Context& ctx) {
  for_each_tuple(g.order(), 4, [&](const std::vector<int>& x) {
    if (!apex_hypotheses(g, x[0], x[1], x[2], x[3])) {
      t.stat("hypotheses_fail");
      return;
    }
    t.stat("hypotheses_hold");
    t.check(x, [&] {
      return from_search(check_apex_hc(g, x[0], x[1], x[2], x[3], ctx.search));
    });
  });
}

void dt_derivation(const Graph& g, Tally& t, const Context& ctx) {
  const int n = g.order();
  const EpsSearchOptions eopt{ctx.search.node_budget};
  auto derive = [&](int v, std::optional<int> w) -> Verdict {
    EpsRequest req;
    req.root = v;
    if (w) req.light = {*w};
    const EpsResult r = find_eps(g, req, eopt);
    if (r.status == SearchStatus::kUndecided) return {Outcome::kUndecided, "node budget hit"};
    if (!r.eps) {
      t.stat("eps_not_found");
      return {};
    }
    if (w && forest_deg(*r.eps, *w) > 1) return {Outcome::kFail, "light vertex saturated"};
    EpsAnchors anchors;
    anchors.root = v;
    if (w) anchors.light = {*w};
    const HamWitness h = eps_to_ham_cycle(g, *r.eps, anchors);
    if (auto e = witness_error(h)) return {Outcome::kFail, "invalid witness: " + *e};
    int at_v = 0;
    int at_w = 0;
    for (Edge e : h.sequence_edges()) {
      if (!g.has_edge(e)) continue;
      if (e.touches(v)) ++at_v;
      if (w && e.touches(*w)) ++at_w;
    }
    if (at_v != 2) return {Outcome::kFail, "a root edge is not in G"};
    if (w && at_w == 0) return {Outcome::kFail, "no G-edge at the light vertex"};
    t.stat("cycles_derived");
    if (w) {
      // Whether the w-edge can also be kept apart from the root's edges.
      IncidenceSpec strict = IncidenceSpec::cycle();
      strict.require(Constraint::g_edge_at(v, 2)).require(Constraint::g_edge_at(*w));
      SearchOptions so = ctx.search;
      so.moves_within = r.eps->subgraph();
      t.stat(ham_search(g, strict, so).found() ? "light_edge_distinct" : "light_edge_shared_only");
    }
    return {};
  };
  for (int v = 0; v < n; ++v) {
    t.check({v}, [&] { return derive(v, std::nullopt); });
    for (int w = 0; w < n; ++w) {
      if (w == v || !inside_v2(g, w)) continue;
      t.check({v, w}, [&] { return derive(v, w); });
    }
  }
}

void fbar_negative(const Graph& g, Tally& t, const Context& ctx) {
  const auto triple = fbar_triple(g);
  if (!triple) return;
  t.stat("fbar_graphs");
  const std::vector<int> common = g.neighbors((*triple)[0]).to_vector();
  const std::vector<int> x{common[0], common[1], (*triple)[0], (*triple)[1], (*triple)[2]};
  t.check(x, [&] { return expect_empty(check_fk(g, x, ctx.search)); }, "", true);
}

// ---- driver --------------------------------------------------------------

using InstanceFn = std::function<void(const Graph&, Tally&, const Context&)>;

enum class Supply { k2Connected, kDt, kEdgeCriticalNonDt, kChains };

struct Plan {
  std::string id;
  Supply supply;
  int min_n;
  int max_n;
  InstanceFn fn;
  std::string family;
};

const std::vector<Plan>& plans() {
  static const std::vector<Plan> all = {
      {"theorem-a", Supply::k2Connected, 3, 7, dichotomy, "2-connected graphs"},
      {"theorem-b", Supply::k2Connected, 4, 7, eps_prescribed_cycle, "2-connected graphs"},
      {"theorem-c", Supply::k2Connected, 3, 7, eps_maximal_cycle, "2-connected graphs"},
      {"theorem-d", Supply::k2Connected, 3, 7, eps_vw, "2-connected graphs"},
      {"lemma-1", Supply::kChains, 3, 7, chain_eps, "non-trivial block chains"},
      {"lemma-2", Supply::kDt, 4, 8, apex_cycles, "2-connected DT-graphs"},
      {"lemma-3", Supply::kDt, 4, 8, vw1w2_cycles, "2-connected DT-graphs"},
      {"theorem-2", Supply::k2Connected, 3, 7, endpoint_paths, "2-connected graphs"},
      {"theorem-3", Supply::k2Connected, 3, 6, strong_f3_all, "2-connected graphs"},
      {"theorem-4", Supply::k2Connected, 4, 6, f4_all_tuples, "2-connected graphs"},
      {"theorem-e", Supply::k2Connected, 3, 7, vw_cycles, "2-connected graphs"},
      {"theorem-f", Supply::k2Connected, 3, 7, f3_edge_paths, "2-connected graphs"},
      {"theorem-g", Supply::kEdgeCriticalNonDt, 4, 8, dt_endblock_edges,
       "edge-critical non-DT 2-connected graphs"},
      {"corollary-1", Supply::kChains, 3, 7, chain_paths_cycles, "non-trivial block chains"},
      {"corollary-2", Supply::k2Connected, 4, 7, edge_two_vertices, "2-connected graphs"},
      {"dt-derivation", Supply::kDt, 3, 8, dt_derivation, "2-connected DT-graphs"},
      {"fbar-negative", Supply::k2Connected, 5, 7, fbar_negative,
       "2-connected graphs with three twin 2-valent vertices"},
  };
  return all;
}

std::vector<Graph> supply(Supply s, int n) {
  switch (s) {
    case Supply::k2Connected:
      return enumerate_2connected(n);
    case Supply::kDt:
      return enumerate_2connected(n, Family::kDt);
    case Supply::kEdgeCriticalNonDt: {
      std::vector<Graph> out;
      for (Graph& g : enumerate_2connected(n, Family::kEdgeCritical)) {
        if (!is_dt(g)) out.push_back(std::move(g));
      }
      return out;
    }
    case Supply::kChains: {
      std::vector<Graph> out;
      for (const Graph& g : enumerate_connected(n)) {
        const auto c = is_block_chain(g);
        if (c && c->blocks.size() >= 2) out.push_back(g);
      }
      return out;
    }
  }
  return {};
}

// Runs fn over the instances on `jobs` threads; merges in instance order so
// the report does not depend on scheduling.
PropertyReport run_instances(const std::vector<Graph>& graphs, const InstanceFn& fn,
                             const Context& ctx, int jobs) {
  std::vector<PropertyReport> parts(graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      Tally t(ctx, graphs[i]);
      fn(graphs[i], t, ctx);
      parts[i] = std::move(t.report);
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(graphs.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  PropertyReport out;
  for (const PropertyReport& p : parts) out.merge(p);
  return out;
}

std::string strip(const std::string& id) {
  std::string s;
  for (char c : id) {
    if (c == '-' || c == '_') continue;
    s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return s;
}

}  // namespace

const std::vector<std::string>& campaign_properties() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const Plan& p : plans()) v.push_back(p.id);
    v.push_back("k2m-negative");
    v.push_back("h-negative");
    return v;
  }();
  return ids;
}

// Descriptive aliases; reports always carry the canonical id.
static const std::vector<std::pair<std::string, std::string>>& campaign_aliases() {
  static const std::vector<std::pair<std::string, std::string>> a = {
      {"f4", "theorem-4"},
      {"strong-f3", "theorem-3"},
      {"endpoint-path", "theorem-2"},
      {"dichotomy", "theorem-a"},
      {"eps-cycle", "theorem-b"},
      {"eps-maximal-cycle", "theorem-c"},
      {"eps-vw", "theorem-d"},
      {"vw-cycle", "theorem-e"},
      {"f3-edge-path", "theorem-f"},
      {"dt-endblock", "theorem-g"},
      {"chain-eps", "lemma-1"},
      {"apex", "lemma-2"},
      {"vw1w2-cycle", "lemma-3"},
      {"chain-paths", "corollary-1"},
      {"edge-two-vertices", "corollary-2"},
  };
  return a;
}

std::string normalize_property(const std::string& id) {
  const std::string want = strip(id);
  for (const std::string& p : campaign_properties()) {
    if (strip(p) == want) return p;
  }
  for (const auto& [alias, p] : campaign_aliases()) {
    if (strip(alias) == want) return p;
  }
  fail(ErrorCode::kInvalidArgument, "unknown property id '" + id + "'");
}

PropertyReport run_campaign(const std::string& property, const CampaignOptions& options) {
  const std::string id = normalize_property(property);
  const auto t0 = std::chrono::steady_clock::now();
  std::string cache_path = options.cache_path;
  if (cache_path.empty()) {
    if (const char* env = std::getenv("HAMSQ_CACHE")) cache_path = env;
  }
  std::optional<ResultsCache> cache;
  if (!cache_path.empty()) cache.emplace(cache_path);
  Context ctx;
  ctx.property = id;
  ctx.search.node_budget = options.budget;
  ctx.cache = cache ? &*cache : nullptr;

  PropertyReport report;
  if (id == "k2m-negative" || id == "h-negative") {
    std::vector<Graph> graphs;
    std::vector<std::vector<int>> tuples;
    std::string family;
    if (id == "k2m-negative") {
      const std::vector<int> ks = options.ks.empty() ? std::vector<int>{5, 6, 7} : options.ks;
      for (int k : ks) {
        if (k < 5) fail(ErrorCode::kInvalidArgument, "k2m-negative: need k >= 5");
        graphs.push_back(build_k2m(k));
        std::vector<int> x(k);
        for (int i = 0; i < k; ++i) x[i] = i;
        tuples.push_back(x);
      }
      family = "complete bipartite K_{2,k-2}";
    } else {
      const auto params = options.h_params.empty()
                              ? std::vector<std::pair<int, int>>{{8, 5}, {9, 5}, {9, 6}}
                              : options.h_params;
      for (auto [n, k] : params) {
        const HExample h = build_h_example(n, k);
        graphs.push_back(h.graph);
        tuples.push_back({h.v, h.w1, h.w2});
      }
      family = "cycle plus apex joined to v_1 and v_k";
    }
    std::vector<PropertyReport> parts;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      Tally t(ctx, graphs[i]);
      const Graph& g = graphs[i];
      const std::vector<int>& x = tuples[i];
      t.check(x, [&] {
        if (id == "k2m-negative") return expect_empty(check_fk(g, x, ctx.search));
        const int ws[] = {x[1], x[2]};
        return expect_empty(check_vw_ham_cycle(g, x[0], ws, ctx.search));
      }, "", true);
      report.merge(t.report);
    }
    report.family = family;
  } else {
    const Plan& plan = *std::find_if(plans().begin(), plans().end(),
                                     [&](const Plan& p) { return p.id == id; });
    const int lo = options.min_n > 0 ? options.min_n : plan.min_n;
    const int hi = options.max_n > 0 ? options.max_n : plan.max_n;
    if (lo > hi) fail(ErrorCode::kInvalidArgument, "empty vertex-count range");
    if (lo < 3 || hi > 10) fail(ErrorCode::kInvalidArgument, "vertex counts must lie in 3..10");
    for (int n = lo; n <= hi; ++n) {
      report.merge(run_instances(supply(plan.supply, n), plan.fn, ctx, options.jobs));
    }
    report.family = plan.family + ", " + std::to_string(lo) + " <= n <= " + std::to_string(hi);
  }
  report.property = id;
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace hamsq
