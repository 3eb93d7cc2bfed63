#include "hamsq/ham_search.hpp"

#include <algorithm>
#include <set>

#include "hamsq/error.hpp"

namespace hamsq {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound:
      return "found";
    case SearchStatus::kExhausted:
      return "exhausted";
    case SearchStatus::kUndecided:
      return "undecided";
  }
  return "?";
}

std::vector<Edge> HamWitness::sequence_edges() const {
  std::vector<Edge> out;
  const int k = static_cast<int>(sequence.size());
  for (int i = 0; i + 1 < k; ++i) out.emplace_back(sequence[i], sequence[i + 1]);
  if (closed && k >= 3) out.emplace_back(sequence[k - 1], sequence[0]);
  return out;
}

void check_spec(const Graph& host, const IncidenceSpec& spec) {
  auto in_range = [&](int v) { return host.contains_vertex(v); };
  if (!spec.closed) {
    if (!in_range(spec.from) || !in_range(spec.to)) {
      fail(ErrorCode::kInvalidArgument, "path endpoints out of range");
    }
    if (spec.from == spec.to) {
      fail(ErrorCode::kInvalidArgument, "path endpoints must differ");
    }
  }
  for (const Constraint& c : spec.constraints) {
    switch (c.kind) {
      case Constraint::Kind::kGEdgeAt:
        if (!in_range(c.vertex) || c.count < 1 || c.count > 2) {
          fail(ErrorCode::kInvalidArgument, "malformed G-edge constraint");
        }
        break;
      case Constraint::Kind::kRequiredEdge:
        if (!in_range(c.edge.u) || !in_range(c.edge.v) ||
            !host.has_edge(c.edge)) {
          fail(ErrorCode::kInvalidArgument,
               "required edge " + to_string(c.edge) + " is not a host edge");
        }
        break;
      case Constraint::Kind::kGEdgeOrNeighborPair:
        if (!in_range(c.vertex)) {
          fail(ErrorCode::kInvalidArgument, "malformed neighbour constraint");
        }
        break;
    }
  }
}

namespace {

std::vector<int> bfs_distances(const Graph& g, int from) {
  std::vector<int> dist(g.order(), -1);
  std::vector<int> queue{from};
  dist[from] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int v = queue[i];
    for (int u : g.neighbors(v)) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

}  // namespace

std::optional<std::string> witness_error(const HamWitness& w) {
  const Graph& g = w.host;
  const VertexSet expected = g.vertices() - w.omitted;
  VertexSet seen;
  for (int v : w.sequence) {
    if (!g.contains_vertex(v)) return "vertex out of range";
    if (w.omitted.contains(v)) return "omitted vertex " + std::to_string(v) + " visited";
    if (seen.contains(v)) return "vertex " + std::to_string(v) + " repeated";
    seen.insert(v);
  }
  if (seen != expected) return "sequence does not cover every vertex";
  if (w.closed != w.spec.closed) return "closedness disagrees with spec";
  if (w.closed && w.sequence.size() < 3) return "cycle shorter than 3";
  const std::vector<Edge> used = w.sequence_edges();
  for (Edge e : used) {
    const int d = bfs_distances(g, e.u)[e.v];
    if (d < 1 || d > 2) {
      return "pair " + to_string(e) + " is not an edge of the square";
    }
  }
  if (!w.closed) {
    if (w.sequence.empty() || w.sequence.front() != w.spec.from ||
        w.sequence.back() != w.spec.to) {
      return "path endpoints disagree with spec";
    }
  }
  auto is_used = [&](Edge e) {
    return std::find(used.begin(), used.end(), e) != used.end();
  };
  std::set<Edge> claimed;
  for (const auto& [id, sat] : w.satisfied) {
    if (id < 0 || id >= static_cast<int>(w.spec.constraints.size())) {
      return "annotation for unknown constraint " + std::to_string(id);
    }
  }
  for (int id = 0; id < static_cast<int>(w.spec.constraints.size()); ++id) {
    const Constraint& c = w.spec.constraints[id];
    auto it = w.satisfied.find(id);
    if (it == w.satisfied.end()) {
      return "constraint " + std::to_string(id) + " has no annotation";
    }
    const ConstraintWitness& sat = it->second;
    for (Edge e : sat.edges) {
      if (!is_used(e)) {
        return "annotated edge " + to_string(e) + " not in sequence";
      }
    }
    if (sat.neighbor_pair) {
      if (c.kind != Constraint::Kind::kGEdgeOrNeighborPair ||
          sat.edges.size() != 1) {
        return "malformed neighbour-pair annotation";
      }
      const Edge e = sat.edges[0];
      if (!g.has_edge(c.vertex, e.u) || !g.has_edge(c.vertex, e.v)) {
        return "neighbour-pair edge not inside N(" + std::to_string(c.vertex) + ")";
      }
      continue;
    }
    const std::size_t want = c.kind == Constraint::Kind::kGEdgeAt ? c.count : 1;
    if (sat.edges.size() != want) {
      return "constraint " + std::to_string(id) + " has wrong edge count";
    }
    for (Edge e : sat.edges) {
      if (!g.has_edge(e)) return "annotated edge " + to_string(e) + " not in G";
      if (c.kind == Constraint::Kind::kRequiredEdge && e != c.edge) {
        return "required edge mismatch";
      }
      if (c.kind != Constraint::Kind::kRequiredEdge && !e.touches(c.vertex)) {
        return "annotated edge " + to_string(e) + " misses its vertex";
      }
      if (c.exclusive && !claimed.insert(e).second) {
        return "edge " + to_string(e) + " claimed twice";
      }
    }
  }
  return std::nullopt;
}

namespace {

class Engine {
 public:
  Engine(const Graph& host, const IncidenceSpec& spec,
         const SearchOptions& options)
      : host_(host),
        spec_(spec),
        n_(host.order()),
        budget_(options.node_budget) {
    const Graph moves = square(options.moves_within ? *options.moves_within : host);
    for (int v = 0; v < n_; ++v) {
      sq_.push_back(moves.row(v));
      cred_.push_back(host.row(v));
    }
    all_ = VertexSet::range(n_).bits();
    for (const Constraint& c : spec_.constraints) {
      if (c.kind == Constraint::Kind::kGEdgeAt) at_.push_back(c);
      if (c.kind == Constraint::Kind::kRequiredEdge) required_.push_back(c.edge);
    }
  }

  HamSearchResult run() {
    HamSearchResult result;
    if (!trivially_impossible()) {
      start_ = spec_.closed ? pick_cycle_start() : spec_.from;
      end_ = spec_.closed ? start_ : spec_.to;
      seq_.assign(n_, -1);
      pos_of_.assign(n_, -1);
      place(0, start_);
      const bool done = extend(1);
      if (done) {
        result.status = SearchStatus::kFound;
        result.witness = std::move(found_);
      } else {
        result.status = aborted_ ? SearchStatus::kUndecided
                                 : SearchStatus::kExhausted;
      }
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  bool trivially_impossible() const {
    if (n_ == 0) return true;
    if (spec_.closed && n_ < 3) return true;
    for (const Constraint& c : at_) {
      if (!spec_.closed && c.count == 2 &&
          (c.vertex == spec_.from || c.vertex == spec_.to)) {
        return true;
      }
      if (std::popcount(cred_[c.vertex]) < c.count) return true;
    }
    return false;
  }

  int pick_cycle_start() const {
    for (const Constraint& c : at_) {
      if (c.count == 2) return c.vertex;
    }
    if (!at_.empty()) return at_.front().vertex;
    if (!required_.empty()) return required_.front().u;
    return 0;
  }

  void place(int pos, int v) {
    seq_[pos] = v;
    pos_of_[v] = pos;
    visited_ |= std::uint64_t{1} << v;
  }
  void unplace(int pos, int v) {
    seq_[pos] = -1;
    pos_of_[v] = -1;
    visited_ &= ~(std::uint64_t{1} << v);
  }

  bool extend(int pos) {
    if (budget_ != 0 && nodes_ >= budget_) {
      aborted_ = true;
      return false;
    }
    ++nodes_;
    const int cur = seq_[pos - 1];
    if (pos == n_) return finish();
    if (!prune_ok(pos, cur)) return false;

    std::uint64_t options = sq_[cur] & ~visited_;
    if (!spec_.closed && pos != n_ - 1) options &= ~(std::uint64_t{1} << end_);
    if (!spec_.closed && pos == n_ - 1) options &= std::uint64_t{1} << end_;
    const std::uint64_t preferred = options & cred_[cur];
    for (std::uint64_t group : {preferred, options & ~preferred}) {
      for (int v : VertexSet(group)) {
        place(pos, v);
        if (extend(pos + 1)) return true;
        unplace(pos, v);
        if (aborted_) return false;
      }
    }
    return false;
  }

  // Cheap necessary conditions on the partial sequence seq_[0..pos-1].
  bool prune_ok(int pos, int cur) const {
    const std::uint64_t unvisited = all_ & ~visited_;
    const std::uint64_t cur_bit = std::uint64_t{1} << cur;
    const std::uint64_t end_bit = std::uint64_t{1} << end_;
    // Every unvisited vertex needs two usable sequence neighbours (one if it
    // is the path end). Tight vertices must take the current vertex, which
    // has one free slot (two while a cycle is still at its start), or the
    // cycle start, which keeps one slot for the closing step.
    int forced_cur = 0;
    int forced_start = 0;
    const bool at_start = spec_.closed && cur == start_;
    for (int u : VertexSet(unvisited)) {
      std::uint64_t avail = sq_[u] & (unvisited | cur_bit | end_bit);
      avail &= ~(std::uint64_t{1} << u);
      const int need = (!spec_.closed && u == end_) ? 1 : 2;
      const int have = std::popcount(avail);
      if (have < need) return false;
      if (have != need || u == end_) continue;
      if (avail & cur_bit) ++forced_cur;
      if (spec_.closed && !at_start && (avail & end_bit)) ++forced_start;
    }
    if (forced_cur > (at_start ? 2 : 1) || forced_start > 1) return false;
    if (spec_.closed && pos < n_ &&
        (sq_[start_] & (unvisited | cur_bit)) == 0) {
      return false;
    }
    // Unvisited vertices must be reachable from the current vertex.
    if (unvisited != 0) {
      std::uint64_t reach = sq_[cur] & unvisited;
      std::uint64_t frontier = reach;
      while (frontier != 0) {
        std::uint64_t next = 0;
        for (int v : VertexSet(frontier)) next |= sq_[v];
        next &= unvisited & ~reach;
        reach |= next;
        frontier = next;
      }
      if (reach != unvisited) return false;
    }
    for (const Constraint& c : at_) {
      if (upper_bound_g_edges(c.vertex, cur, unvisited) < c.count) return false;
    }
    for (Edge e : required_) {
      if (fully_fixed(e.u, cur) && !adjacent_in_sequence(e.u, e.v)) return false;
      if (fully_fixed(e.v, cur) && !adjacent_in_sequence(e.u, e.v)) return false;
    }
    return true;
  }

  // Both sequence neighbours of x are already determined.
  bool fully_fixed(int x, int cur) const {
    if (pos_of_[x] < 0 || x == cur) return false;
    if (spec_.closed && x == start_) return false;
    return true;
  }

  bool adjacent_in_sequence(int a, int b) const {
    const int pa = pos_of_[a];
    const int pb = pos_of_[b];
    if (pa < 0 || pb < 0) return false;
    if (pa - pb == 1 || pb - pa == 1) return true;
    if (spec_.closed) {
      const int last = n_ - 1;
      return (pa == 0 && pb == last) || (pb == 0 && pa == last);
    }
    return false;
  }

  int upper_bound_g_edges(int x, int cur, std::uint64_t unvisited) const {
    const bool endpoint = !spec_.closed && (x == spec_.from || x == spec_.to);
    const int slots = endpoint ? 1 : 2;
    const int p = pos_of_[x];
    if (p < 0) {
      std::uint64_t near = unvisited | (std::uint64_t{1} << cur);
      if (spec_.closed) near |= std::uint64_t{1} << start_;
      near &= ~(std::uint64_t{1} << x);
      return std::min(slots, std::popcount(cred_[x] & near));
    }
    int determined = 0;
    int known = 0;
    for (int q : {p - 1, p + 1}) {
      if (q < 0 || q >= n_ || seq_[q] < 0) continue;
      ++determined;
      if (host_.has_edge(x, seq_[q])) ++known;
    }
    const int pending = slots - determined;
    return known + std::min(pending, std::popcount(cred_[x] & unvisited));
  }

  bool finish() {
    const int last = seq_[n_ - 1];
    if (spec_.closed && !((sq_[last] >> start_) & 1U)) return false;
    if (!spec_.closed && last != end_) return false;
    HamWitness w;
    w.host = host_;
    w.sequence = seq_;
    w.closed = spec_.closed;
    w.spec = spec_;
    const std::vector<Edge> used = w.sequence_edges();
    std::vector<Edge> taken;
    if (!assign(0, used, taken, w.satisfied)) return false;
    found_ = std::move(w);
    return true;
  }

  // Distinct-representative assignment of sequence edges to constraints.
  bool assign(std::size_t id, const std::vector<Edge>& used,
              std::vector<Edge>& taken,
              std::map<int, ConstraintWitness>& out) const {
    if (id == spec_.constraints.size()) return true;
    const Constraint& c = spec_.constraints[id];
    auto free_edge = [&](Edge e) {
      return !c.exclusive || std::find(taken.begin(), taken.end(), e) == taken.end();
    };
    const std::size_t mark = taken.size();
    auto claim = [&](Edge e) {
      if (c.exclusive) taken.push_back(e);
    };
    auto release = [&] { taken.resize(mark); };
    const int key = static_cast<int>(id);
    switch (c.kind) {
      case Constraint::Kind::kRequiredEdge: {
        if (std::find(used.begin(), used.end(), c.edge) == used.end() ||
            !free_edge(c.edge)) {
          return false;
        }
        claim(c.edge);
        out[key] = {{c.edge}, false};
        if (assign(id + 1, used, taken, out)) return true;
        release();
        out.erase(key);
        return false;
      }
      case Constraint::Kind::kGEdgeAt:
      case Constraint::Kind::kGEdgeOrNeighborPair: {
        std::vector<Edge> options;
        for (Edge e : used) {
          if (e.touches(c.vertex) && host_.has_edge(e) && free_edge(e)) {
            options.push_back(e);
          }
        }
        const int need = c.kind == Constraint::Kind::kGEdgeAt ? c.count : 1;
        const int k = static_cast<int>(options.size());
        if (need == 1) {
          for (Edge e : options) {
            claim(e);
            out[key] = {{e}, false};
            if (assign(id + 1, used, taken, out)) return true;
            release();
          }
        } else {
          for (int a = 0; a < k; ++a) {
            for (int b = a + 1; b < k; ++b) {
              claim(options[a]);
              claim(options[b]);
              out[key] = {{options[a], options[b]}, false};
              if (assign(id + 1, used, taken, out)) return true;
              release();
            }
          }
        }
        out.erase(key);
        if (c.kind == Constraint::Kind::kGEdgeOrNeighborPair) {
          for (Edge e : used) {
            if (host_.has_edge(c.vertex, e.u) && host_.has_edge(c.vertex, e.v)) {
              out[key] = {{e}, true};
              if (assign(id + 1, used, taken, out)) return true;
              out.erase(key);
              break;
            }
          }
        }
        return false;
      }
    }
    return false;
  }

  const Graph& host_;
  const IncidenceSpec& spec_;
  const int n_;
  const std::uint64_t budget_;
  std::vector<std::uint64_t> sq_;
  std::vector<std::uint64_t> cred_;
  std::vector<Constraint> at_;
  std::vector<Edge> required_;
  std::uint64_t all_ = 0;
  std::uint64_t visited_ = 0;
  std::vector<int> seq_;
  std::vector<int> pos_of_;
  int start_ = 0;
  int end_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::optional<HamWitness> found_;
};

}  // namespace

HamSearchResult ham_search(const Graph& host, const IncidenceSpec& spec,
                           const SearchOptions& options) {
  check_spec(host, spec);
  if (options.moves_within) {
    const Graph& s = *options.moves_within;
    if (s.order() != host.order()) {
      fail(ErrorCode::kInvalidArgument, "move graph must span the host");
    }
    for (Edge e : s.edges()) {
      if (!host.has_edge(e)) {
        fail(ErrorCode::kInvalidArgument, "move graph must be a host subgraph");
      }
    }
  }
  return Engine(host, spec, options).run();
}

}  // namespace hamsq
