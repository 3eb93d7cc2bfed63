#include <gtest/gtest.h>

#include "hamsq/blocks.hpp"
#include "hamsq/cycles.hpp"
#include "hamsq/enumerate.hpp"
#include "hamsq/eps.hpp"
#include "hamsq/error.hpp"
#include "oracles.hpp"

using namespace hamsq;

namespace {

std::vector<Graph> small_connected(int max_n) {
  std::vector<Graph> out;
  for (int n = 2; n <= max_n; ++n) {
    for (const Graph& g : enumerate_connected(n)) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST(Eps, CycleIsItsOwnEps) {
  const EpsResult r = find_eps(cycle_graph(5), {});
  ASSERT_EQ(r.status, SearchStatus::kFound);
  EXPECT_EQ(r.eps->eul.size(), 5);
  EXPECT_TRUE(r.eps->forest.empty());
  EXPECT_FALSE(eps_error(*r.eps).has_value());
}

TEST(Eps, PathNeedsForest) {
  const EpsResult r = find_eps(path_graph(4), {});
  ASSERT_EQ(r.status, SearchStatus::kFound);
  EXPECT_EQ(r.eps->forest.size(), 3);
  EpsRequest req;
  req.root = 1;
  EXPECT_EQ(find_eps(path_graph(4), req).status, SearchStatus::kExhausted);
}

TEST(Eps, RequiredCycleLandsInEulerianPart) {
  EpsRequest req;
  req.required_cycle = Cycle{0, 1, 2, 3};
  const EpsResult r = find_eps(complete_graph(4), req);
  ASSERT_EQ(r.status, SearchStatus::kFound);
  for (Edge e : cycle_edges({0, 1, 2, 3})) EXPECT_TRUE(r.eps->eul.contains(e));
  req.required_cycle = Cycle{0, 2, 1, 3, 4};
  EXPECT_THROW(find_eps(complete_graph(4), req), Error);
}

TEST(Eps, Errors) {
  EXPECT_THROW(find_eps(Graph(3, {{0, 1}}), {}), Error);
  EpsRequest dup;
  dup.light = {1, 1};
  EXPECT_THROW(find_eps(cycle_graph(4), dup), Error);
  EpsRequest bad;
  bad.root = 9;
  EXPECT_THROW(find_eps(cycle_graph(4), bad), Error);
  EXPECT_THROW(find_jeps(cycle_graph(4), 1, 1, {}), Error);
}

TEST(Eps, ExistenceMatchesColouringOracle) {
  int found = 0, empty = 0;
  for (const Graph& g : small_connected(5)) {
    const int n = g.order();
    for (int r = -1; r < n; ++r) {
      for (int l = -1; l < n; ++l) {
        if (l >= 0 && l == r) continue;
        EpsRequest req;
        oracle::EpsQuery q;
        if (r >= 0) {
          req.root = r;
          q.no_forest = {r};
        }
        if (l >= 0) {
          req.light = {l};
          q.light = {l};
        }
        const EpsResult got = find_eps(g, req);
        ASSERT_NE(got.status, SearchStatus::kUndecided);
        ASSERT_EQ(got.status == SearchStatus::kFound, oracle::eps_exists(g, q))
            << "root " << r << " light " << l << " edges " << g.size();
        if (got.eps) {
          ++found;
          ASSERT_FALSE(eps_error(*got.eps).has_value()) << *eps_error(*got.eps);
          if (r >= 0) EXPECT_EQ(forest_degree(got.eps->forest, r), 0);
          if (l >= 0) EXPECT_LE(forest_degree(got.eps->forest, l), 1);
        } else {
          ++empty;
        }
      }
    }
  }
  EXPECT_GT(found, 0);
  EXPECT_GT(empty, 0);
}

TEST(Jeps, ExistenceMatchesColouringOracle) {
  for (const Graph& g : small_connected(5)) {
    const int n = g.order();
    for (int v = 0; v < n; ++v) {
      for (int w = v + 1; w < n; ++w) {
        const int ends[] = {v, w};
        const JepsResult got = find_jeps(g, v, w, ends);
        oracle::EpsQuery q;
        q.no_forest = {v, w};
        q.odd = {v, w};
        ASSERT_EQ(got.status == SearchStatus::kFound, oracle::eps_exists(g, q));
        if (got.jeps) {
          ASSERT_FALSE(jeps_error(*got.jeps).has_value()) << *jeps_error(*got.jeps);
          EXPECT_EQ(got.jeps->from, v);
          EXPECT_EQ(got.jeps->to, w);
          EXPECT_FALSE(got.jeps->trail.empty());
        }
      }
    }
  }
}

TEST(Eps, ValidatorRejectsBrokenDecompositions) {
  const Graph g = cycle_graph(4);
  EpsDecomposition odd{g, EdgeSet(g, {{0, 1}, {1, 2}, {2, 3}}), EdgeSet()};
  EXPECT_TRUE(eps_error(odd).has_value());  // odd degrees and not spanning? 0 and 3 odd
  EpsDecomposition overlap{g, EdgeSet(g, g.edges()), EdgeSet(g, {{0, 1}})};
  EXPECT_TRUE(eps_error(overlap).has_value());
  const Graph k4 = complete_graph(4);
  EpsDecomposition cyc{k4, EdgeSet(), EdgeSet(k4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}})};
  EXPECT_TRUE(eps_error(cyc).has_value());
  EpsDecomposition claw{k4, EdgeSet(), EdgeSet(k4, {{0, 1}, {0, 2}, {0, 3}})};
  EXPECT_TRUE(eps_error(claw).has_value());
}

TEST(Dichotomy, HoldsOnAllBlocksUpToSix) {
  int jeps = 0;
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : enumerate_2connected(n)) {
      for (int v = 0; v < n; ++v) {
        for (int w = v + 1; w < n; ++w) {
          const EpsOrJeps r = theorem_a(g, v, w);
          if (const auto* e = std::get_if<EpsDecomposition>(&r)) {
            ASSERT_FALSE(eps_error(*e).has_value());
            EXPECT_EQ(forest_degree(e->forest, v), 0);
            EXPECT_EQ(forest_degree(e->forest, w), 0);
          } else {
            const auto& j = std::get<JepsDecomposition>(r);
            ASSERT_FALSE(jeps_error(j).has_value());
            EXPECT_EQ(forest_degree(j.forest, v), 0);
            EXPECT_EQ(forest_degree(j.forest, w), 0);
            ++jeps;
          }
        }
      }
    }
  }
  EXPECT_GT(jeps, 0);
  EXPECT_THROW(theorem_a(path_graph(4), 0, 3), Error);
}

TEST(MaximalCycle, PrefersAllThree) {
  const Graph k4 = complete_graph(4);
  const Cycle c = maximal_cycle(k4, 0, 1, 2);
  EXPECT_TRUE(is_cycle_of(k4, c));
  for (int x : {0, 1, 2}) EXPECT_NE(std::find(c.begin(), c.end(), x), c.end());
  // Theta graph: 0 and 1 joined by three paths; no cycle holds all three
  // internal vertices 2, 3, 4.
  const Graph theta(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});
  const Cycle t = maximal_cycle(theta, 2, 3, 4);
  EXPECT_TRUE(is_cycle_of(theta, t));
  EXPECT_NE(std::find(t.begin(), t.end(), 2), t.end());
  EXPECT_NE(std::find(t.begin(), t.end(), 3), t.end());
}

TEST(EpsToHam, DtGraphsGiveAnchoredCycles) {
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : enumerate_2connected(n, Family::kDt)) {
      for (int v = 0; v < n; ++v) {
        EpsRequest req;
        req.root = v;
        const EpsResult r = find_eps(g, req);
        if (!r.eps) continue;
        EpsAnchors a;
        a.root = v;
        const HamWitness w = eps_to_ham_cycle(g, *r.eps, a);
        ASSERT_FALSE(witness_error(w).has_value()) << *witness_error(w);
        const int k = static_cast<int>(w.sequence.size());
        const auto at = std::find(w.sequence.begin(), w.sequence.end(), v) - w.sequence.begin();
        EXPECT_TRUE(g.has_edge(v, w.sequence[(at + 1) % k]));
        EXPECT_TRUE(g.has_edge(v, w.sequence[(at + k - 1) % k]));
      }
    }
  }
  EXPECT_THROW(eps_to_ham_cycle(complete_graph(4), *find_eps(complete_graph(4), {}).eps, {}),
               Error);
}

TEST(JepsToHam, PathWithGEdgesAtBareEnds) {
  int checked = 0;
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : enumerate_2connected(n, Family::kDt)) {
      for (int v = 0; v < n; ++v) {
        for (int w = v + 1; w < n; ++w) {
          const int ends[] = {v, w};
          const JepsResult r = find_jeps(g, v, w, ends);
          if (!r.jeps) continue;
          const HamWitness h = jeps_to_ham_path(g, *r.jeps);
          ASSERT_FALSE(witness_error(h).has_value()) << *witness_error(h);
          EXPECT_EQ(h.sequence.front(), v);
          EXPECT_EQ(h.sequence.back(), w);
          EXPECT_TRUE(g.has_edge(h.sequence[0], h.sequence[1]));
          EXPECT_TRUE(g.has_edge(h.sequence[n - 2], h.sequence[n - 1]));
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Colouring, MinimisesForestSize) {
  // K4: a hamiltonian 4-cycle covers everything with no forest.
  const ColouringResult r = search_colouring(complete_graph(4), {});
  ASSERT_TRUE(r.colouring.has_value());
  EXPECT_TRUE(r.colouring->forest.empty());
  // Bowtie pieces are triangles: still no forest needed.
  const Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  EXPECT_TRUE(search_colouring(bowtie, {}).colouring->forest.empty());
}

TEST(Colouring, BudgetGivesUndecided) {
  EpsSearchOptions o;
  o.node_budget = 1;
  EXPECT_EQ(search_colouring(complete_graph(6), {}, o).status, SearchStatus::kUndecided);
}
