#include "hamsq/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>

#include "hamsq/blocks.hpp"
#include "hamsq/error.hpp"

namespace hamsq {

namespace {

int bit_count(int n) { return n * (n - 1) / 2; }

// Stable colour refinement starting from degrees. Colours are ranks of
// invariant signatures, so the cell order is isomorphism-invariant.
std::vector<int> refine(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<int> around;
      for (int u : g.neighbors(v)) around.push_back(colour[u]);
      std::sort(around.begin(), around.end());
      sig[v].insert(sig[v].end(), around.begin(), around.end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      colour[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    const int now = static_cast<int>(distinct.size());
    if (now == classes) break;
    classes = now;
  }
  return colour;
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()), total_(bit_count(n_)) {
    const std::vector<int> colour = refine(g);
    std::vector<int> order(n_);
    for (int v = 0; v < n_; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return colour[a] < colour[b]; });
    for (int p = 0; p < n_; ++p) {
      cell_of_pos_.push_back(colour[order[p]]);
    }
    colour_ = colour;
    perm_.assign(n_, -1);
  }

  std::pair<std::uint64_t, std::vector<int>> run() {
    best_ = ~std::uint64_t{0};
    dfs(0, 0, 0);
    return {best_, best_perm_};
  }

 private:
  void dfs(int j, std::uint64_t prefix, int bits) {
    if (j == n_) {
      if (!have_best_ || prefix < best_) {
        best_ = prefix;
        best_perm_ = perm_;
        have_best_ = true;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (((used_ >> v) & 1U) || colour_[v] != cell_of_pos_[j]) continue;
      std::uint64_t next = prefix;
      for (int i = 0; i < j; ++i) {
        next = (next << 1) | (g_.has_edge(perm_[i], v) ? 1U : 0U);
      }
      const int nbits = bits + j;
      if (have_best_ && nbits > 0) {
        const std::uint64_t best_prefix = best_ >> (total_ - nbits);
        if (next > best_prefix) continue;
      }
      perm_[j] = v;
      used_ |= std::uint64_t{1} << v;
      dfs(j + 1, next, nbits);
      used_ &= ~(std::uint64_t{1} << v);
    }
  }

  const Graph& g_;
  const int n_;
  const int total_;
  std::vector<int> colour_;
  std::vector<int> cell_of_pos_;
  std::vector<int> perm_;
  std::vector<int> best_perm_;
  std::uint64_t used_ = 0;
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

void check_canonical_order(int n) {
  if (n < 0 || n > kMaxCanonicalOrder) {
    fail(ErrorCode::kInvalidArgument,
         "canonical codes need 0 <= n <= " + std::to_string(kMaxCanonicalOrder));
  }
}

}  // namespace

std::uint64_t plain_code(const Graph& g) {
  check_canonical_order(g.order());
  std::uint64_t code = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.has_edge(i, j) ? 1U : 0U);
  }
  return code;
}

Graph graph_from_code(int n, std::uint64_t code) {
  check_canonical_order(n);
  std::vector<Edge> edges;
  int t = bit_count(n) - 1;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, --t) {
      if ((code >> t) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

std::uint64_t canonical_code(const Graph& g) {
  check_canonical_order(g.order());
  if (g.order() < 2) return 0;
  return Canonizer(g).run().first;
}

Graph canonical_form(const Graph& g) {
  return graph_from_code(g.order(), canonical_code(g));
}

const std::vector<Graph>& enumerate_connected(int n) {
  if (n < 1 || n > 10) {
    fail(ErrorCode::kInvalidArgument, "enumerate_connected: need 1 <= n <= 10");
  }
  static std::recursive_mutex mu;
  static std::map<int, std::vector<Graph>> memo;
  std::lock_guard<std::recursive_mutex> lock(mu);
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<Graph> out;
  if (n == 1) {
    out.emplace_back(1, std::initializer_list<std::pair<int, int>>{});
  } else {
    // Every connected graph has a vertex whose deletion leaves it connected.
    std::unordered_set<std::uint64_t> codes;
    const int m = n - 1;
    for (const Graph& base : enumerate_connected(m)) {
      const std::vector<Edge> base_edges = base.edges();
      for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) {
        std::vector<Edge> edges = base_edges;
        for (int v : VertexSet(s)) edges.emplace_back(v, m);
        codes.insert(canonical_code(Graph(n, edges)));
      }
    }
    std::vector<std::uint64_t> sorted(codes.begin(), codes.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::uint64_t c : sorted) out.push_back(graph_from_code(n, c));
  }
  return memo.emplace(n, std::move(out)).first->second;
}

std::vector<Graph> enumerate_2connected(int n, Family filter) {
  if (n < 3 || n > 10) {
    fail(ErrorCode::kInvalidArgument, "enumerate_2connected: need 3 <= n <= 10");
  }
  std::vector<Graph> out;
  for (const Graph& g : enumerate_connected(n)) {
    if (!is_2_connected(g)) continue;
    if (filter == Family::kDt && !is_dt(g)) continue;
    if (filter == Family::kEdgeCritical && !is_edge_critical(g)) continue;
    out.push_back(g);
  }
  return out;
}

}  // namespace hamsq
