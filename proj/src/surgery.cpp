#include "hamsq/surgery.hpp"

#include <algorithm>

#include "hamsq/error.hpp"

namespace hamsq {

namespace {

VertexSet covered(const HamWitness& w) {
  VertexSet s;
  for (int v : w.sequence) s.insert(v);
  return s;
}

bool constraint_mentions(const Constraint& c, int u) {
  if (c.kind == Constraint::Kind::kRequiredEdge) return c.edge.touches(u);
  return c.vertex == u;
}

// Copies the annotated constraints of `w` whose edges all survive in `kept`.
void carry_constraints(const HamWitness& w, const std::vector<Edge>& kept,
                       int removed_vertex, HamWitness& out) {
  for (const auto& [id, sat] : w.satisfied) {
    const Constraint& c = w.spec.constraints[id];
    if (removed_vertex >= 0 && constraint_mentions(c, removed_vertex)) continue;
    const bool survives = std::all_of(sat.edges.begin(), sat.edges.end(), [&](Edge e) {
      return std::find(kept.begin(), kept.end(), e) != kept.end();
    });
    if (!survives) continue;
    const int next = static_cast<int>(out.spec.constraints.size());
    out.spec.constraints.push_back(c);
    out.satisfied[next] = sat;
  }
}

void validate(const HamWitness& w, const char* who) {
  if (auto e = witness_error(w)) {
    fail(ErrorCode::kInvalidArgument, std::string(who) + ": result invalid: " + *e);
  }
}

// Index of `a` followed by `b` in the sequence (cyclically when closed), or -1.
int find_step(const HamWitness& w, int a, int b) {
  const int k = static_cast<int>(w.sequence.size());
  for (int i = 0; i < k; ++i) {
    const int j = i + 1 < k ? i + 1 : (w.closed ? 0 : -1);
    if (j >= 0 && w.sequence[i] == a && w.sequence[j] == b) return i;
  }
  return -1;
}

}  // namespace

HamWitness shortcut(const HamWitness& w, int u) {
  const auto it = std::find(w.sequence.begin(), w.sequence.end(), u);
  if (it == w.sequence.end()) {
    fail(ErrorCode::kInvalidArgument, "shortcut: vertex not in witness");
  }
  const int k = static_cast<int>(w.sequence.size());
  const int p = static_cast<int>(it - w.sequence.begin());
  if (!w.closed && (p == 0 || p == k - 1)) {
    fail(ErrorCode::kInvalidArgument, "shortcut: cannot drop a path end");
  }
  if (w.closed && k <= 3) {
    fail(ErrorCode::kInvalidArgument, "shortcut: cycle would become too short");
  }
  const int a = w.sequence[(p + k - 1) % k];
  const int b = w.sequence[(p + 1) % k];
  if (!square(w.host).has_edge(a, b)) {
    fail(ErrorCode::kInvalidArgument,
         "shortcut: " + to_string(Edge(a, b)) + " is not an edge of the square");
  }
  HamWitness out;
  out.host = w.host;
  out.closed = w.closed;
  out.omitted = w.omitted;
  out.omitted.insert(u);
  out.sequence = w.sequence;
  out.sequence.erase(out.sequence.begin() + p);
  out.spec.closed = w.spec.closed;
  out.spec.from = w.spec.from;
  out.spec.to = w.spec.to;
  carry_constraints(w, out.sequence_edges(), u, out);
  validate(out, "shortcut");
  return out;
}

HamWitness splice(const HamWitness& a, const HamWitness& b, Edge ea, Edge eb,
                  Edge bridge) {
  if (!(a.host == b.host)) fail(ErrorCode::kInvalidArgument, "splice: hosts differ");
  if (!b.closed) fail(ErrorCode::kInvalidArgument, "splice: inserted witness must be closed");
  const VertexSet shared = covered(a) & covered(b);
  if (shared.size() != 1) {
    fail(ErrorCode::kInvalidArgument, "splice: witnesses must share exactly one vertex");
  }
  const int j = *shared.begin();
  if (!ea.touches(j) || !eb.touches(j)) {
    fail(ErrorCode::kInvalidArgument, "splice: cut edges must meet the junction");
  }
  const int x = ea.other(j);
  const int z = eb.other(j);
  if (bridge != Edge(x, z)) {
    fail(ErrorCode::kInvalidArgument, "splice: bridge must join the cut edges' far ends");
  }
  // b - eb read as a walk j -> ... -> z, without j itself.
  std::vector<int> inner;
  {
    int s = find_step(b, j, z);
    bool forward = false;
    if (s < 0) {
      s = find_step(b, z, j);
      forward = true;
    }
    if (s < 0) fail(ErrorCode::kInvalidArgument, "splice: eb not in b");
    const int k = static_cast<int>(b.sequence.size());
    std::vector<int> seq = b.sequence;
    if (!forward) std::reverse(seq.begin(), seq.end());
    const int start = static_cast<int>(std::find(seq.begin(), seq.end(), j) - seq.begin());
    for (int i = 1; i < k; ++i) inner.push_back(seq[(start + i) % k]);
    if (inner.back() != z) fail(ErrorCode::kInternal, "splice: walk orientation");
  }
  HamWitness out;
  out.host = a.host;
  out.closed = a.closed;
  out.spec.closed = a.spec.closed;
  out.spec.from = a.spec.from;
  out.spec.to = a.spec.to;
  const int k = static_cast<int>(a.sequence.size());
  int s = find_step(a, j, x);
  if (s >= 0) {
    // ..., j, [inner: ... z], x, ...
    for (int i = 0; i <= s; ++i) out.sequence.push_back(a.sequence[i]);
    out.sequence.insert(out.sequence.end(), inner.begin(), inner.end());
    for (int i = s + 1; i < k; ++i) out.sequence.push_back(a.sequence[i]);
  } else {
    s = find_step(a, x, j);
    if (s < 0) fail(ErrorCode::kInvalidArgument, "splice: ea not in a");
    // ..., x, [z ... reversed inner], j, ...
    for (int i = 0; i <= s; ++i) out.sequence.push_back(a.sequence[i]);
    out.sequence.insert(out.sequence.end(), inner.rbegin(), inner.rend());
    for (int i = s + 1; i < k; ++i) out.sequence.push_back(a.sequence[i]);
  }
  out.omitted = a.host.vertices() - (covered(a) | covered(b));
  const std::vector<Edge> kept = out.sequence_edges();
  carry_constraints(a, kept, -1, out);
  carry_constraints(b, kept, -1, out);
  validate(out, "splice");
  return out;
}

HamWitness concatenate(std::span<const HamWitness> parts) {
  if (parts.empty()) fail(ErrorCode::kInvalidArgument, "concatenate: nothing to join");
  HamWitness out;
  out.host = parts[0].host;
  out.closed = false;
  VertexSet seen;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const HamWitness& p = parts[i];
    if (p.closed) fail(ErrorCode::kInvalidArgument, "concatenate: parts must be open");
    if (!(p.host == out.host)) fail(ErrorCode::kInvalidArgument, "concatenate: hosts differ");
    if (p.sequence.empty()) fail(ErrorCode::kInvalidArgument, "concatenate: empty part");
    std::size_t from = 0;
    if (i > 0) {
      if (p.sequence.front() != out.sequence.back()) {
        fail(ErrorCode::kInvalidArgument, "concatenate: parts do not meet end to start");
      }
      from = 1;
    }
    for (std::size_t q = from; q < p.sequence.size(); ++q) {
      if (seen.contains(p.sequence[q])) {
        fail(ErrorCode::kInvalidArgument, "concatenate: parts overlap");
      }
      seen.insert(p.sequence[q]);
      out.sequence.push_back(p.sequence[q]);
    }
  }
  out.omitted = out.host.vertices() - seen;
  out.spec.closed = false;
  out.spec.from = out.sequence.front();
  out.spec.to = out.sequence.back();
  const std::vector<Edge> kept = out.sequence_edges();
  for (const HamWitness& p : parts) carry_constraints(p, kept, -1, out);
  validate(out, "concatenate");
  return out;
}

}  // namespace hamsq
