#include "hamsq/eps.hpp"

#include <algorithm>
#include <numeric>

#include "hamsq/blocks.hpp"
#include "hamsq/error.hpp"

namespace hamsq {

namespace {

std::vector<Edge> concat(std::vector<Edge> a, const std::vector<Edge>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

int degree_in(const std::vector<Edge>& edges, int v) {
  return static_cast<int>(
      std::count_if(edges.begin(), edges.end(), [v](Edge e) { return e.touches(v); }));
}

// Linear forest: max degree 2 and no cycle.
std::optional<std::string> linear_forest_error(int n, const std::vector<Edge>& f) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Edge e : f) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a == b) return "forest contains a cycle";
    parent[a] = b;
  }
  for (int v = 0; v < n; ++v) {
    if (degree_in(f, v) > 2) return "forest degree above 2 at " + std::to_string(v);
  }
  return std::nullopt;
}

std::optional<std::string> spanning_connected_error(const Graph& host,
                                                    const std::vector<Edge>& s) {
  for (Edge e : s) {
    if (!host.contains_vertex(e.u) || !host.contains_vertex(e.v) ||
        !host.has_edge(e)) {
      return "edge " + to_string(e) + " not in host";
    }
  }
  std::vector<Edge> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return "parts are not edge-disjoint";
  }
  if (!Graph(host.order(), sorted).is_connected()) {
    return "union is not spanning and connected";
  }
  return std::nullopt;
}

std::optional<std::string> even_error(int n, const std::vector<Edge>& eul) {
  for (int v = 0; v < n; ++v) {
    if (degree_in(eul, v) % 2 != 0) {
      return "eulerian part has odd degree at " + std::to_string(v);
    }
  }
  return std::nullopt;
}

}  // namespace

Graph EpsDecomposition::subgraph() const {
  return host.spanning_subgraph(concat(eul.edges(), forest.edges()));
}

Graph JepsDecomposition::subgraph() const {
  return host.spanning_subgraph(
      concat(concat(trail, eul.edges()), forest.edges()));
}

int forest_degree(const EdgeSet& forest, int v) {
  return degree_in(forest.edges(), v);
}

std::optional<std::string> eps_error(const EpsDecomposition& s) {
  const int n = s.host.order();
  if (auto e = spanning_connected_error(
          s.host, concat(s.eul.edges(), s.forest.edges()))) {
    return e;
  }
  if (auto e = even_error(n, s.eul.edges())) return e;
  return linear_forest_error(n, s.forest.edges());
}

std::optional<std::string> jeps_error(const JepsDecomposition& s) {
  const int n = s.host.order();
  if (!s.host.contains_vertex(s.from) || !s.host.contains_vertex(s.to) ||
      s.from == s.to) {
    return "trail ends must be distinct vertices";
  }
  if (s.trail.empty()) return "trail is empty";
  int at = s.from;
  for (Edge e : s.trail) {
    if (!e.touches(at)) return "trail is not a walk";
    at = e.other(at);
  }
  if (at != s.to) return "trail does not end at its declared end";
  for (int v = 0; v < n; ++v) {
    const bool odd = degree_in(s.trail, v) % 2 == 1;
    if (odd != (v == s.from || v == s.to)) {
      return "trail parity wrong at " + std::to_string(v);
    }
  }
  if (auto e = spanning_connected_error(
          s.host, concat(concat(s.trail, s.eul.edges()), s.forest.edges()))) {
    return e;
  }
  if (auto e = even_error(n, s.eul.edges())) return e;
  return linear_forest_error(n, s.forest.edges());
}

namespace {

enum Colour : std::uint8_t { kEul = 0, kForest = 1, kUnused = 2 };

class ColouringEngine {
 public:
  ColouringEngine(const Graph& g, const EpsConstraints& c,
                  const EpsSearchOptions& options)
      : g_(g),
        n_(g.order()),
        edges_(g.edges()),
        m_(static_cast<int>(edges_.size())),
        budget_(options.node_budget),
        target_odd_(c.odd.bits()),
        saturating_(c.single_saturated.bits()) {
    forced_.assign(m_, false);
    for (Edge e : c.in_eul) {
      auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
      if (it == edges_.end() || *it != e) {
        fail(ErrorCode::kInvalidArgument,
             "forced edge " + to_string(e) + " not in graph");
      }
      forced_[it - edges_.begin()] = true;
    }
    cap_.assign(n_, 2);
    for (int v : c.light) cap_[v] = 1;
    for (int v : c.no_forest) cap_[v] = 0;
    remaining_.resize(n_);
    avail_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      remaining_[v] = g.degree(v);
      avail_[v] = g.row(v);
    }
    s_deg_.assign(n_, 0);
    f_deg_.assign(n_, 0);
    parent_.resize(n_);
    std::iota(parent_.begin(), parent_.end(), 0);
    rank_.assign(n_, 0);
    colour_.assign(m_, kUnused);
    best_forest_ = m_ + 1;
  }

  ColouringResult run() {
    ColouringResult r;
    if (feasible_start()) dfs(0);
    r.nodes = nodes_;
    if (best_) {
      r.status = SearchStatus::kFound;
      r.colouring = std::move(best_);
    } else {
      r.status = aborted_ ? SearchStatus::kUndecided : SearchStatus::kExhausted;
    }
    // A budget hit after a solution was found still leaves a valid (if not
    // provably optimal) colouring; report it as found.
    return r;
  }

 private:
  bool feasible_start() const {
    if (!g_.is_connected()) return false;
    for (int v = 0; v < n_; ++v) {
      if (remaining_[v] == 0 && !vertex_complete_ok(v)) return false;
    }
    return true;
  }

  bool vertex_complete_ok(int v) const {
    if (((eul_par_ >> v) & 1U) != ((target_odd_ >> v) & 1U)) return false;
    return n_ == 1 || s_deg_[v] > 0;
  }

  bool connected() const {
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (int v : VertexSet(frontier)) next |= avail_[v];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == VertexSet::range(n_).bits();
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  void dfs(int i) {
    if (stop_) return;
    if (budget_ != 0 && nodes_ >= budget_) {
      aborted_ = true;
      stop_ = true;
      return;
    }
    ++nodes_;
    if (i == m_) {
      record();
      return;
    }
    const Edge e = edges_[i];
    const int u = e.u;
    const int v = e.v;
    --remaining_[u];
    --remaining_[v];
    const bool u_done = remaining_[u] == 0;
    const bool v_done = remaining_[v] == 0;

    // Eulerian.
    {
      eul_par_ ^= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
      ++s_deg_[u];
      ++s_deg_[v];
      colour_[i] = kEul;
      if ((!u_done || vertex_complete_ok(u)) && (!v_done || vertex_complete_ok(v))) {
        dfs(i + 1);
      }
      --s_deg_[u];
      --s_deg_[v];
      eul_par_ ^= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    }
    // Forest.
    if (!forced_[i] && !stop_ && forest_count_ + 1 < best_forest_ &&
        f_deg_[u] < cap_[u] && f_deg_[v] < cap_[v]) {
      int ru = find(u);
      int rv = find(v);
      const int newly_saturated =
          ((f_deg_[u] == 1 && ((saturating_ >> u) & 1U)) ? 1 : 0) +
          ((f_deg_[v] == 1 && ((saturating_ >> v) & 1U)) ? 1 : 0);
      if (ru != rv && saturated_ + newly_saturated <= 1) {
        if (rank_[ru] > rank_[rv]) std::swap(ru, rv);
        parent_[ru] = rv;
        const bool bumped = rank_[ru] == rank_[rv];
        if (bumped) ++rank_[rv];
        ++f_deg_[u];
        ++f_deg_[v];
        ++s_deg_[u];
        ++s_deg_[v];
        ++forest_count_;
        saturated_ += newly_saturated;
        colour_[i] = kForest;
        if ((!u_done || vertex_complete_ok(u)) &&
            (!v_done || vertex_complete_ok(v))) {
          dfs(i + 1);
        }
        saturated_ -= newly_saturated;
        --forest_count_;
        --s_deg_[u];
        --s_deg_[v];
        --f_deg_[u];
        --f_deg_[v];
        if (bumped) --rank_[rv];
        parent_[ru] = ru;
      }
    }
    // Unused.
    if (!forced_[i] && !stop_) {
      avail_[u] &= ~(std::uint64_t{1} << v);
      avail_[v] &= ~(std::uint64_t{1} << u);
      colour_[i] = kUnused;
      if ((!u_done || vertex_complete_ok(u)) &&
          (!v_done || vertex_complete_ok(v)) && connected()) {
        dfs(i + 1);
      }
      avail_[u] |= std::uint64_t{1} << v;
      avail_[v] |= std::uint64_t{1} << u;
    }
    ++remaining_[u];
    ++remaining_[v];
  }

  void record() {
    Colouring c;
    for (int i = 0; i < m_; ++i) {
      if (colour_[i] == kEul) c.eul.push_back(edges_[i]);
      if (colour_[i] == kForest) c.forest.push_back(edges_[i]);
    }
    best_forest_ = forest_count_;
    best_ = std::move(c);
    if (best_forest_ == 0) stop_ = true;
  }

  const Graph& g_;
  const int n_;
  const std::vector<Edge> edges_;
  const int m_;
  const std::uint64_t budget_;
  const std::uint64_t target_odd_;
  const std::uint64_t saturating_;
  std::vector<bool> forced_;
  std::vector<int> cap_;
  std::vector<int> remaining_;
  std::vector<std::uint64_t> avail_;
  std::vector<int> s_deg_;
  std::vector<int> f_deg_;
  std::vector<int> parent_;
  std::vector<int> rank_;
  std::vector<Colour> colour_;
  std::uint64_t eul_par_ = 0;
  int forest_count_ = 0;
  int saturated_ = 0;
  int best_forest_ = 0;
  std::optional<Colouring> best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool stop_ = false;
};

void check_vertex(const Graph& g, int v, const char* what) {
  if (!g.contains_vertex(v)) {
    fail(ErrorCode::kInvalidArgument,
         std::string(what) + " vertex " + std::to_string(v) + " out of range");
  }
}

}  // namespace

ColouringResult search_colouring(const Graph& g, const EpsConstraints& c,
                                 const EpsSearchOptions& options) {
  return ColouringEngine(g, c, options).run();
}

EpsResult find_eps(const Graph& g, const EpsRequest& request,
                   const EpsSearchOptions& options) {
  if (!g.is_connected()) {
    fail(ErrorCode::kPrecondition, "find_eps: graph is not connected");
  }
  EpsConstraints c;
  if (request.root) {
    check_vertex(g, *request.root, "root");
    c.no_forest.insert(*request.root);
  }
  for (int w : request.light) {
    check_vertex(g, w, "light");
    if (c.light.contains(w)) {
      fail(ErrorCode::kInvalidArgument,
           "find_eps: vertex " + std::to_string(w) + " listed twice");
    }
    c.light.insert(w);
  }
  if (request.required_cycle) {
    if (!is_cycle_of(g, *request.required_cycle)) {
      fail(ErrorCode::kInvalidArgument, "find_eps: required cycle is not a cycle of g");
    }
    c.in_eul = cycle_edges(*request.required_cycle);
  }
  ColouringResult r = search_colouring(g, c, options);
  EpsResult out;
  out.status = r.status;
  out.nodes = r.nodes;
  if (r.colouring) {
    out.eps = EpsDecomposition{g, EdgeSet(g, r.colouring->eul),
                               EdgeSet(g, r.colouring->forest)};
  }
  return out;
}

JepsDecomposition make_jeps(const Graph& g, int v, int w, const Colouring& c) {
  const Graph t(g.order(), c.eul);
  // Component of v inside the eulerian-coloured part.
  std::uint64_t comp = std::uint64_t{1} << v;
  std::uint64_t frontier = comp;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (int x : VertexSet(frontier)) next |= t.row(x);
    frontier = next & ~comp;
    comp |= next;
  }
  if (!((comp >> w) & 1U)) {
    fail(ErrorCode::kInternal, "make_jeps: trail ends in different components");
  }
  std::vector<std::uint64_t> rest(g.order(), 0);
  for (int x : VertexSet(comp)) rest[x] = t.row(x);
  std::vector<int> stack{v};
  std::vector<int> walk;
  while (!stack.empty()) {
    const int x = stack.back();
    if (rest[x] != 0) {
      const int y = std::countr_zero(rest[x]);
      rest[x] &= ~(std::uint64_t{1} << y);
      rest[y] &= ~(std::uint64_t{1} << x);
      stack.push_back(y);
    } else {
      walk.push_back(x);
      stack.pop_back();
    }
  }
  std::reverse(walk.begin(), walk.end());
  if (walk.front() != v) {
    fail(ErrorCode::kInternal, "make_jeps: euler trail does not start at v");
  }
  JepsDecomposition out;
  out.host = g;
  out.from = v;
  out.to = w;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    out.trail.emplace_back(walk[i], walk[i + 1]);
  }
  std::vector<Edge> even;
  for (Edge e : c.eul) {
    if (!((comp >> e.u) & 1U)) even.push_back(e);
  }
  out.eul = EdgeSet(g, std::move(even));
  out.forest = EdgeSet(g, c.forest);
  return out;
}

JepsResult find_jeps(const Graph& g, int v, int w,
                     std::span<const int> forbidden_forest_at,
                     const EpsSearchOptions& options) {
  check_vertex(g, v, "trail end");
  check_vertex(g, w, "trail end");
  if (v == w) fail(ErrorCode::kInvalidArgument, "find_jeps: v == w");
  if (!g.is_connected()) {
    fail(ErrorCode::kPrecondition, "find_jeps: graph is not connected");
  }
  EpsConstraints c;
  c.odd = VertexSet{v, w};
  for (int x : forbidden_forest_at) {
    check_vertex(g, x, "forbidden");
    c.no_forest.insert(x);
  }
  ColouringResult r = search_colouring(g, c, options);
  JepsResult out;
  out.status = r.status;
  out.nodes = r.nodes;
  if (r.colouring) out.jeps = make_jeps(g, v, w, *r.colouring);
  return out;
}

EpsOrJeps theorem_a(const Graph& g, int v, int w) {
  check_vertex(g, v, "v");
  check_vertex(g, w, "w");
  if (v == w) fail(ErrorCode::kInvalidArgument, "theorem_a: v == w");
  if (!is_2_connected(g)) {
    fail(ErrorCode::kPrecondition, "theorem_a: graph is not 2-connected");
  }
  EpsConstraints c;
  c.no_forest = VertexSet{v, w};
  ColouringResult eps = search_colouring(g, c);
  if (eps.colouring) {
    return EpsDecomposition{g, EdgeSet(g, eps.colouring->eul),
                            EdgeSet(g, eps.colouring->forest)};
  }
  const int ends[] = {v, w};
  JepsResult jeps = find_jeps(g, v, w, ends);
  if (jeps.jeps) return *jeps.jeps;
  fail(ErrorCode::kTheoremViolation,
       "theorem_a: neither EPS nor JEPS exists for (" + std::to_string(v) +
           ", " + std::to_string(w) + ")");
}

Cycle maximal_cycle(const Graph& g, int v, int w1, int w2) {
  check_vertex(g, v, "v");
  check_vertex(g, w1, "w1");
  check_vertex(g, w2, "w2");
  if (v == w1 || v == w2 || w1 == w2) {
    fail(ErrorCode::kInvalidArgument, "maximal_cycle: vertices must be distinct");
  }
  if (!is_2_connected(g)) {
    fail(ErrorCode::kPrecondition, "maximal_cycle: graph is not 2-connected");
  }
  if (auto c = find_cycle_through(g, VertexSet{v, w1, w2})) return *c;
  if (auto c = find_cycle_through(g, VertexSet{v, w1})) return *c;
  fail(ErrorCode::kTheoremViolation, "maximal_cycle: no cycle through v and w1");
}

HamWitness eps_to_ham_cycle(const Graph& g, const EpsDecomposition& s,
                            const EpsAnchors& anchors) {
  if (!is_dt(g)) fail(ErrorCode::kPrecondition, "eps_to_ham_cycle: not a DT-graph");
  if (!(s.host == g)) {
    fail(ErrorCode::kInvalidArgument, "eps_to_ham_cycle: decomposition host differs");
  }
  if (auto e = eps_error(s)) {
    fail(ErrorCode::kInvalidArgument, "eps_to_ham_cycle: invalid EPS: " + *e);
  }
  IncidenceSpec spec = IncidenceSpec::cycle();
  if (anchors.root) {
    check_vertex(g, *anchors.root, "root");
    spec.require(Constraint::g_edge_at(*anchors.root, 2));
  }
  for (int w : anchors.light) {
    check_vertex(g, w, "light");
    if (anchors.root && w == *anchors.root) continue;
    spec.require(Constraint::g_edge_at(w, 1).shared());
  }
  SearchOptions options;
  options.moves_within = s.subgraph();
  HamSearchResult r = ham_search(g, spec, options);
  if (!r.witness) {
    fail(ErrorCode::kTheoremViolation,
         "eps_to_ham_cycle: no hamiltonian cycle of S^2 meets the anchors");
  }
  return std::move(*r.witness);
}

HamWitness jeps_to_ham_path(const Graph& g, const JepsDecomposition& s) {
  if (!is_dt(g)) fail(ErrorCode::kPrecondition, "jeps_to_ham_path: not a DT-graph");
  if (!(s.host == g)) {
    fail(ErrorCode::kInvalidArgument, "jeps_to_ham_path: decomposition host differs");
  }
  if (auto e = jeps_error(s)) {
    fail(ErrorCode::kInvalidArgument, "jeps_to_ham_path: invalid JEPS: " + *e);
  }
  IncidenceSpec spec = IncidenceSpec::path(s.from, s.to);
  if (forest_degree(s.forest, s.from) == 0) {
    spec.require(Constraint::g_edge_at(s.from, 1));
  }
  if (forest_degree(s.forest, s.to) == 0) {
    spec.require(Constraint::g_edge_at(s.to, 1));
  }
  SearchOptions options;
  options.moves_within = s.subgraph();
  HamSearchResult r = ham_search(g, spec, options);
  // A pendant end of S can leave S^2 without a G-edge there; G^2 is the contract.
  if (!r.witness) r = ham_search(g, spec);
  if (!r.witness) {
    fail(ErrorCode::kTheoremViolation,
         "jeps_to_ham_path: no hamiltonian path of G^2 meets the end conditions");
  }
  return std::move(*r.witness);
}

}  // namespace hamsq
