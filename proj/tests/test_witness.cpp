#include <gtest/gtest.h>

#include <random>

#include "hamsq/blocks.hpp"
#include "hamsq/checkers.hpp"
#include "hamsq/enumerate.hpp"
#include "hamsq/error.hpp"
#include "hamsq/graph6.hpp"
#include "hamsq/ham_search.hpp"
#include "hamsq/harness.hpp"
#include "hamsq/json_io.hpp"
#include "hamsq/surgery.hpp"
#include "oracles.hpp"

using namespace hamsq;

namespace {

const Graph kBowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});

HamWitness manual(const Graph& host, std::vector<int> seq, bool closed) {
  HamWitness w;
  w.host = host;
  w.sequence = std::move(seq);
  w.closed = closed;
  VertexSet seen;
  for (int v : w.sequence) seen.insert(v);
  w.omitted = host.vertices() - seen;
  w.spec = closed ? IncidenceSpec::cycle()
                  : IncidenceSpec::path(w.sequence.front(), w.sequence.back());
  return w;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInternal;
}

}  // namespace

TEST(HamSearch, Examples) {
  const auto k3 = ham_search(complete_graph(3), IncidenceSpec::path(0, 2));
  ASSERT_TRUE(k3.found());
  EXPECT_EQ(k3.witness->sequence, (std::vector<int>{0, 1, 2}));

  const auto c6 = ham_search(cycle_graph(6),
                             IncidenceSpec::cycle().require(Constraint::g_edge_at(0, 2)));
  ASSERT_TRUE(c6.found());
  EXPECT_FALSE(witness_error(*c6.witness).has_value());

  const Graph k23 = complete_bipartite(2, 3);
  IncidenceSpec f5 = IncidenceSpec::path(0, 1);
  for (int x : {2, 3, 4}) f5.require(Constraint::g_edge_at(x));
  EXPECT_EQ(ham_search(k23, f5).status, SearchStatus::kExhausted);
}

TEST(HamSearch, MalformedSpec) {
  EXPECT_EQ(code_of([] { ham_search(complete_graph(3), IncidenceSpec::path(0, 0)); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] {
              ham_search(cycle_graph(4), IncidenceSpec::cycle().require(
                                             Constraint::required_edge(0, 2)));
            }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] {
              ham_search(cycle_graph(4),
                         IncidenceSpec::cycle().require(Constraint::g_edge_at(0, 3)));
            }),
            ErrorCode::kInvalidArgument);
}

TEST(HamSearch, BudgetYieldsUndecided) {
  const Graph k23 = complete_bipartite(2, 3);
  IncidenceSpec f5 = IncidenceSpec::path(0, 1);
  for (int x : {2, 3, 4}) f5.require(Constraint::g_edge_at(x));
  SearchOptions o;
  o.node_budget = 2;
  EXPECT_EQ(ham_search(k23, f5, o).status, SearchStatus::kUndecided);
}

TEST(HamSearch, AgreesWithPermutationOracle) {
  std::mt19937 rng(2024);
  std::vector<Graph> pool;
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : enumerate_2connected(n)) pool.push_back(g);
  }
  int found = 0;
  for (int i = 0; i < 400; ++i) {
    const Graph& g = pool[rng() % pool.size()];
    const IncidenceSpec spec = oracle::random_spec(rng, g);
    const HamSearchResult r = ham_search(g, spec);
    ASSERT_NE(r.status, SearchStatus::kUndecided);
    ASSERT_EQ(r.found(), oracle::ham_exists(g, spec)) << graph6_encode(g);
    if (r.witness) {
      ++found;
      ASSERT_FALSE(witness_error(*r.witness).has_value()) << *witness_error(*r.witness);
    }
  }
  EXPECT_GT(found, 50);
  EXPECT_LT(found, 400);
}

TEST(Validator, CatchesMutations) {
  std::mt19937 rng(5);
  const Graph g = cycle_graph(7);
  const auto r = ham_search(g, IncidenceSpec::path(0, 6).require(Constraint::g_edge_at(3)));
  ASSERT_TRUE(r.found());
  const HamWitness& good = *r.witness;
  ASSERT_FALSE(witness_error(good).has_value());
  // Swaps of two positions: the validator must agree with a direct check of
  // endpoints, square adjacency and the claimed G-edge at 3.
  const auto m = oracle::square(oracle::matrix(g));
  int caught = 0;
  for (std::size_t i = 0; i < good.sequence.size(); ++i) {
    for (std::size_t j = i + 1; j < good.sequence.size(); ++j) {
      HamWitness bad = good;
      std::swap(bad.sequence[i], bad.sequence[j]);
      const auto& q = bad.sequence;
      bool ok = q.front() == 0 && q.back() == 6;
      bool claimed = false;
      const Edge e = good.satisfied.at(0).edges.at(0);
      for (std::size_t k = 0; k + 1 < q.size(); ++k) {
        ok = ok && m[q[k]][q[k + 1]];
        if (Edge(q[k], q[k + 1]) == e) claimed = true;
      }
      ok = ok && claimed;
      EXPECT_EQ(!witness_error(bad).has_value(), ok) << i << "," << j;
      if (!ok) ++caught;
    }
  }
  EXPECT_GT(caught, 15);
  HamWitness dup = good;
  dup.sequence[1] = dup.sequence[2];
  EXPECT_TRUE(witness_error(dup).has_value());
  HamWitness missing = good;
  missing.satisfied.clear();
  EXPECT_TRUE(witness_error(missing).has_value());
  HamWitness wrong_edge = good;
  wrong_edge.satisfied[0].edges = {Edge(0, 6)};
  EXPECT_TRUE(witness_error(wrong_edge).has_value());
}

TEST(Validator, DistinctnessEnforced) {
  // C4 with G-edges at 0 and 1: the witness must not claim 01 twice.
  const Graph c4 = cycle_graph(4);
  HamWitness w = manual(c4, {0, 1, 2, 3}, true);
  w.spec.require(Constraint::g_edge_at(0)).require(Constraint::g_edge_at(1));
  w.satisfied[0] = {{Edge(0, 1)}, false};
  w.satisfied[1] = {{Edge(0, 1)}, false};
  EXPECT_TRUE(witness_error(w).has_value());
  w.spec.constraints[1] = w.spec.constraints[1].shared();
  EXPECT_FALSE(witness_error(w).has_value());
}

TEST(Checkers, Fk) {
  const int k3t[] = {0, 1, 2};
  const auto k3 = check_fk(complete_graph(3), k3t);
  ASSERT_TRUE(k3.found());
  EXPECT_EQ(k3.witness->sequence, (std::vector<int>{0, 2, 1}));
  const int c6t[] = {0, 3, 1, 5};
  EXPECT_TRUE(check_fk(cycle_graph(6), c6t).found());
  const int k23t[] = {0, 1, 2, 3, 4};
  EXPECT_EQ(check_fk(complete_bipartite(2, 3), k23t).status, SearchStatus::kExhausted);
  const int two[] = {0, 1};
  EXPECT_THROW(check_fk(complete_graph(3), two), Error);
  const int rep[] = {0, 1, 1};
  EXPECT_THROW(check_fk(complete_graph(3), rep), Error);
  EXPECT_THROW(check_fk(kBowtie, k3t), Error);
}

TEST(Checkers, HasFkProperty) {
  EXPECT_EQ(has_fk_property(complete_graph(3), 3).status(), ReportStatus::kPass);
  EXPECT_EQ(has_fk_property(cycle_graph(6), 4).status(), ReportStatus::kPass);
  const PropertyReport r = has_fk_property(complete_bipartite(2, 3), 5);
  EXPECT_EQ(r.status(), ReportStatus::kFail);
  ASSERT_EQ(r.failures.size(), 1U);
  EXPECT_EQ(r.failures[0].tuple.size(), 5U);
}

TEST(Checkers, StrongF3) {
  const auto k3 = check_strong_f3(complete_graph(3), 0, 1, 2, 1);
  ASSERT_TRUE(k3.found());
  EXPECT_EQ(k3.witness->sequence, (std::vector<int>{0, 2, 1}));
  EXPECT_TRUE(check_strong_f3(cycle_graph(5), 0, 2, 4, 2).found());
  EXPECT_THROW(check_strong_f3(kBowtie, 0, 1, 2, 1), Error);
  EXPECT_THROW(check_strong_f3(complete_graph(3), 0, 1, 2, 3), Error);
}

TEST(Checkers, EndpointConditionPath) {
  const auto c4 = check_theorem2(cycle_graph(4), 0, 2);
  ASSERT_TRUE(c4.found());
  const auto& s = c4.witness->sequence;
  EXPECT_EQ(s.front(), 0);
  EXPECT_EQ(s.back(), 2);
  EXPECT_TRUE(cycle_graph(4).has_edge(s[0], s[1]));
  const auto k3 = check_theorem2(complete_graph(3), 0, 1);
  ASSERT_TRUE(k3.found());
  EXPECT_EQ(k3.witness->sequence, (std::vector<int>{0, 2, 1}));
  const auto k23 = check_theorem2(complete_bipartite(2, 3), 0, 2);
  ASSERT_TRUE(k23.found());
  EXPECT_EQ(k23.witness->satisfied.count(1), 1U);
}

TEST(Checkers, VwCycle) {
  const int one[] = {1};
  const auto c4 = check_vw_ham_cycle(cycle_graph(4), 0, one);
  ASSERT_TRUE(c4.found());
  std::set<Edge> claimed;
  for (const auto& [id, sat] : c4.witness->satisfied) {
    for (Edge e : sat.edges) claimed.insert(e);
  }
  EXPECT_EQ(claimed.size(), 3U);
  const int two[] = {2};
  EXPECT_TRUE(check_vw_ham_cycle(complete_graph(4), 0, two).found());
  const HExample h = build_h_example(8, 5);
  const int ws[] = {h.w1, h.w2};
  EXPECT_EQ(check_vw_ham_cycle(h.graph, h.v, ws).status, SearchStatus::kExhausted);
  const int self[] = {0};
  EXPECT_THROW(check_vw_ham_cycle(cycle_graph(4), 0, self), Error);
}

TEST(Checkers, Fbar) {
  EXPECT_TRUE(check_fbar(complete_bipartite(2, 3)));
  EXPECT_FALSE(check_fbar(cycle_graph(6)));
  EXPECT_TRUE(check_fbar(complete_bipartite(2, 4)));
  const auto t = fbar_triple(complete_bipartite(2, 3));
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(*t, (std::array<int, 3>{2, 3, 4}));
}

TEST(Checkers, ApexHc) {
  const auto c6 = check_apex_hc(cycle_graph(6), 0, 3, 1, 4);
  ASSERT_TRUE(c6.found());
  EXPECT_EQ(c6.witness->host.order(), 7);
  EXPECT_FALSE(witness_error(*c6.witness).has_value());
  const auto c4 = check_apex_hc(cycle_graph(4), 0, 2, 1, 3);
  EXPECT_NE(c4.status, SearchStatus::kUndecided);
  EXPECT_THROW(check_apex_hc(complete_graph(4), 0, 1, 2, 3), Error);
}

TEST(Checkers, BlockChainPathsAndCycles) {
  const ChainWitnesses bow = check_corollary1(kBowtie, 0, 3);
  EXPECT_TRUE(bow.cycle.found());
  EXPECT_TRUE(bow.path.found());
  EXPECT_TRUE(bow.strengthened);
  const Graph tbt(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
  const ChainWitnesses r = check_corollary1(tbt, 0, 5);
  EXPECT_TRUE(r.cycle.found());
  EXPECT_TRUE(r.path.found());
  EXPECT_THROW(check_corollary1(cycle_graph(4), 0, 2), Error);
  EXPECT_THROW(check_corollary1(kBowtie, 0, 2), Error);
}

TEST(Checkers, EdgePlusTwoVertices) {
  const auto c5 = check_corollary2(cycle_graph(5), Edge(0, 1), 2, 3);
  ASSERT_TRUE(c5.found());
  EXPECT_TRUE(check_corollary2(complete_graph(4), Edge(0, 1), 2, 3).found());
  EXPECT_THROW(check_corollary2(complete_graph(4), Edge(0, 1), 1, 3), Error);
}

TEST(Surgery, Shortcut) {
  const HamWitness c4 = manual(cycle_graph(4), {0, 1, 2, 3}, true);
  const HamWitness r = shortcut(c4, 1);
  EXPECT_EQ(r.sequence, (std::vector<int>{0, 2, 3}));
  EXPECT_TRUE(r.omitted.contains(1));
  EXPECT_FALSE(witness_error(r).has_value());
  const HamWitness c6 = manual(cycle_graph(6), {0, 1, 2, 3, 4, 5}, true);
  EXPECT_FALSE(witness_error(shortcut(c6, 1)).has_value());
  // After dropping 1, the neighbours of 2 are 0 and 3: distance 3 on C8.
  const HamWitness p = manual(cycle_graph(8), {0, 1, 2, 3, 4, 5, 6, 7}, false);
  const HamWitness p1 = shortcut(p, 1);
  EXPECT_EQ(code_of([&] { shortcut(p1, 2); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { shortcut(p, 0); }), ErrorCode::kInvalidArgument);
}

TEST(Surgery, ShortcutDropsBrokenConstraints) {
  HamWitness w = manual(cycle_graph(5), {0, 1, 2, 3, 4}, true);
  w.spec.require(Constraint::g_edge_at(1)).require(Constraint::g_edge_at(3));
  w.satisfied[0] = {{Edge(0, 1)}, false};
  w.satisfied[1] = {{Edge(3, 4)}, false};
  ASSERT_FALSE(witness_error(w).has_value());
  const HamWitness r = shortcut(w, 2);
  ASSERT_EQ(r.spec.constraints.size(), 2U);
  const HamWitness r2 = shortcut(w, 1);
  ASSERT_EQ(r2.spec.constraints.size(), 1U);
  EXPECT_EQ(r2.spec.constraints[0].vertex, 3);
}

TEST(Surgery, SpliceTwoTriangles) {
  const HamWitness a = manual(kBowtie, {0, 1, 2}, true);
  const HamWitness b = manual(kBowtie, {2, 3, 4}, true);
  const HamWitness r = splice(a, b, Edge(2, 0), Edge(2, 3), Edge(0, 3));
  EXPECT_EQ(r.sequence.size(), 5U);
  EXPECT_TRUE(r.omitted.empty());
  EXPECT_FALSE(witness_error(r).has_value());
  EXPECT_EQ(code_of([&] { splice(a, b, Edge(2, 0), Edge(2, 3), Edge(1, 3)); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { splice(a, a, Edge(2, 0), Edge(2, 1), Edge(0, 1)); }),
            ErrorCode::kInvalidArgument);
}

TEST(Surgery, Concatenate) {
  const Graph p5 = path_graph(5);
  const HamWitness parts[] = {manual(p5, {0, 1, 2}, false), manual(p5, {2, 3, 4}, false)};
  const HamWitness r = concatenate(parts);
  EXPECT_EQ(r.sequence, (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_FALSE(witness_error(r).has_value());
  const HamWitness bad[] = {manual(p5, {0, 1, 2}, false), manual(p5, {3, 4}, false)};
  EXPECT_THROW(concatenate(bad), Error);
}

TEST(Json, WitnessRoundTrip) {
  std::mt19937 rng(99);
  int trips = 0;
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : enumerate_2connected(n)) {
      const IncidenceSpec spec = oracle::random_spec(rng, g);
      const HamSearchResult r = ham_search(g, spec);
      if (!r.witness) continue;
      const Json j = to_json(*r.witness);
      EXPECT_EQ(j["graph6"], graph6_encode(g));
      const HamWitness back = witness_from_json(Json::parse(j.dump()));
      EXPECT_EQ(back.sequence, r.witness->sequence);
      EXPECT_EQ(back.spec, r.witness->spec);
      EXPECT_EQ(back.satisfied, r.witness->satisfied);
      EXPECT_FALSE(witness_error(back).has_value());
      ++trips;
    }
  }
  EXPECT_GT(trips, 10);
  EXPECT_THROW(witness_from_json(Json::parse("{}")), Error);
}

TEST(Json, RunCheckDispatch) {
  ReportStatus s;
  const Json f = run_check(complete_graph(3), "f4", {0, 1, 2}, 0, s);
  EXPECT_EQ(s, ReportStatus::kPass);
  EXPECT_EQ(f["property"], "f3");
  run_check(complete_bipartite(2, 3), "f5", {0, 1, 2, 3, 4}, 0, s);
  EXPECT_EQ(s, ReportStatus::kFail);
  run_check(complete_bipartite(2, 3), "f5", {0, 1, 2, 3, 4}, 1, s);
  EXPECT_EQ(s, ReportStatus::kUndecided);
  const Json t2 = run_check(complete_bipartite(2, 3), "theorem-2", {0, 2}, 0, s);
  EXPECT_EQ(s, ReportStatus::kPass);
  EXPECT_TRUE(t2.contains("branch"));
  run_check(complete_bipartite(2, 3), "fbar", {}, 0, s);
  EXPECT_EQ(s, ReportStatus::kPass);
  run_check(complete_graph(4), "theorem-a", {0, 1}, 0, s);
  EXPECT_EQ(s, ReportStatus::kPass);
  EXPECT_THROW(run_check(complete_graph(4), "nope", {0}, 0, s), Error);
  EXPECT_THROW(run_check(complete_graph(4), "theorem-2", {0}, 0, s), Error);
}
