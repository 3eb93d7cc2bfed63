#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "hamsq/blocks.hpp"
#include "hamsq/enumerate.hpp"
#include "hamsq/error.hpp"
#include "hamsq/graph6.hpp"
#include "hamsq/harness.hpp"
#include "hamsq/json_io.hpp"
#include "oracles.hpp"

using namespace hamsq;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST(Enumerate, SmallFamilies) {
  const auto n3 = enumerate_2connected(3);
  ASSERT_EQ(n3.size(), 1U);
  EXPECT_EQ(n3[0], complete_graph(3));
  const auto n4 = enumerate_2connected(4);
  ASSERT_EQ(n4.size(), 3U);
  std::set<int> sizes;
  for (const Graph& g : n4) sizes.insert(g.size());
  EXPECT_EQ(sizes, (std::set<int>{4, 5, 6}));
  EXPECT_THROW(enumerate_2connected(2), Error);
  EXPECT_THROW(enumerate_2connected(11), Error);
}

TEST(Enumerate, MatchesDumbEnumerator) {
  for (int n = 1; n <= 6; ++n) {
    const oracle::Counts c = oracle::dumb_counts(n);
    EXPECT_EQ(static_cast<int>(enumerate_connected(n).size()), c.connected) << n;
    if (n >= 3) {
      EXPECT_EQ(static_cast<int>(enumerate_2connected(n).size()), c.two_connected) << n;
      EXPECT_EQ(static_cast<int>(enumerate_2connected(n, Family::kDt).size()), c.dt) << n;
    }
  }
}

TEST(Enumerate, PublishedTwoConnectedCounts) {
  // Unlabeled 2-connected graphs on n nodes.
  const int published[] = {0, 0, 0, 1, 3, 10, 56, 468, 7123};
  for (int n = 3; n <= 8; ++n) {
    EXPECT_EQ(static_cast<int>(enumerate_2connected(n).size()), published[n]) << n;
  }
}

TEST(Enumerate, IsomorphFreeAndCanonical) {
  for (int n = 3; n <= 7; ++n) {
    std::set<std::uint64_t> codes;
    for (const Graph& g : enumerate_2connected(n)) {
      ASSERT_TRUE(codes.insert(canonical_code(g)).second);
      EXPECT_EQ(canonical_form(g), g);
      EXPECT_EQ(graph6_decode(graph6_encode(g)), g);
    }
  }
}

TEST(Enumerate, CanonicalCodeIsRelabellingInvariant) {
  const Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 2}});
  const std::uint64_t code = canonical_code(g);
  std::vector<int> p = {0, 1, 2, 3, 4, 5};
  int checked = 0;
  do {
    std::vector<Edge> es;
    for (Edge e : g.edges()) es.emplace_back(p[e.u], p[e.v]);
    ASSERT_EQ(canonical_code(Graph(6, es)), code);
    ++checked;
  } while (std::next_permutation(p.begin(), p.end()));
  EXPECT_EQ(checked, 720);
  EXPECT_EQ(graph_from_code(6, plain_code(g)), g);
}

TEST(Builders, K2m) {
  bool flagged = true;
  const Graph k5 = build_k2m(5, &flagged);
  EXPECT_FALSE(flagged);
  EXPECT_EQ(k5, complete_bipartite(2, 3));
  EXPECT_EQ(k5.degree(0), 3);
  EXPECT_EQ(k5.degree(1), 3);
  EXPECT_EQ(build_k2m(6), complete_bipartite(2, 4));
  const Graph c4 = build_k2m(4, &flagged);
  EXPECT_TRUE(flagged);
  EXPECT_EQ(c4.size(), 4);
  EXPECT_THROW(build_k2m(3), Error);
}

TEST(Builders, HExample) {
  const HExample h8 = build_h_example(8, 5);
  EXPECT_EQ(h8.graph.order(), 9);
  EXPECT_EQ(h8.graph.size(), 10);
  EXPECT_EQ(h8.v, 8);
  EXPECT_EQ(h8.w1, 0);
  EXPECT_EQ(h8.w2, 4);
  EXPECT_EQ(build_h_example(9, 5).graph.order(), 10);
  EXPECT_THROW(build_h_example(7, 5), Error);
  EXPECT_THROW(build_h_example(9, 4), Error);
}

TEST(Campaign, PropertyIds) {
  EXPECT_EQ(normalize_property("theorem4"), "theorem-4");
  EXPECT_EQ(normalize_property("Theorem_A"), "theorem-a");
  EXPECT_EQ(normalize_property("k2m-negative"), "k2m-negative");
  EXPECT_EQ(normalize_property("f4"), "theorem-4");
  EXPECT_EQ(normalize_property("Strong_F3"), "theorem-3");
  EXPECT_EQ(normalize_property("vw1w2-cycle"), "lemma-3");
  EXPECT_THROW(normalize_property("theorem-z"), Error);
  for (const char* id : {"theorem-a", "lemma-1", "lemma-2", "lemma-3", "theorem-2",
                         "theorem-3", "theorem-4", "theorem-e", "theorem-f", "theorem-g",
                         "corollary-1", "corollary-2", "fbar-negative", "k2m-negative",
                         "h-negative"}) {
    const auto& ids = campaign_properties();
    EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
  }
  EXPECT_THROW(run_campaign("bogus"), Error);
}

TEST(Campaign, F4UpToSix) {
  CampaignOptions o;
  o.max_n = 6;
  const PropertyReport r = run_campaign("theorem4", o);
  EXPECT_EQ(r.status(), ReportStatus::kPass);
  EXPECT_EQ(r.instances, 69U);
  EXPECT_EQ(r.checks, 21432U);
  EXPECT_TRUE(r.failures.empty());
}

TEST(Campaign, DeterministicAcrossJobs) {
  CampaignOptions one;
  one.max_n = 6;
  CampaignOptions four = one;
  four.jobs = 4;
  for (const char* id : {"theorem-2", "theorem-e", "fbar-negative"}) {
    const PropertyReport a = run_campaign(id, one);
    const PropertyReport b = run_campaign(id, four);
    EXPECT_EQ(a.checks, b.checks) << id;
    EXPECT_EQ(a.failures, b.failures) << id;
    EXPECT_EQ(a.counterexamples, b.counterexamples) << id;
    EXPECT_EQ(a.stats, b.stats) << id;
  }
}

TEST(Campaign, Negatives) {
  CampaignOptions o;
  o.ks = {5, 6, 7};
  const PropertyReport k = run_campaign("k2m-negative", o);
  EXPECT_EQ(k.status(), ReportStatus::kPass);
  EXPECT_EQ(k.counterexamples.size(), 3U);
  const PropertyReport h = run_campaign("h-negative");
  EXPECT_EQ(h.status(), ReportStatus::kPass);
  EXPECT_EQ(h.counterexamples.size(), 3U);
  // A tight budget cannot confirm a negative.
  CampaignOptions tight;
  tight.ks = {6};
  tight.budget = 3;
  EXPECT_EQ(run_campaign("k2m-negative", tight).status(), ReportStatus::kUndecided);
}

TEST(Campaign, FailuresAreReCheckable) {
  CampaignOptions o;
  o.ks = {5};
  const PropertyReport r = run_campaign("k2m-negative", o);
  ASSERT_EQ(r.counterexamples.size(), 1U);
  const Failure& f = r.counterexamples[0];
  ReportStatus s;
  run_check(graph6_decode(f.graph6), "f5", f.tuple, 0, s);
  EXPECT_EQ(s, ReportStatus::kFail);
}

TEST(Campaign, CacheRoundTrip) {
  const auto path = temp_file("hamsq_cache_test.tsv");
  CampaignOptions o;
  o.max_n = 5;
  o.cache_path = path.string();
  const PropertyReport first = run_campaign("theorem-2", o);
  ASSERT_TRUE(std::filesystem::exists(path));
  std::ifstream in(path);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    EXPECT_EQ(std::count(line.begin(), line.end(), '\t'), 3) << line;
  }
  EXPECT_GT(lines, 0);
  const auto size_before = std::filesystem::file_size(path);
  const PropertyReport second = run_campaign("theorem-2", o);
  EXPECT_EQ(first.checks, second.checks);
  EXPECT_EQ(second.status(), ReportStatus::kPass);
  EXPECT_EQ(std::filesystem::file_size(path), size_before);
  std::filesystem::remove(path);
}

TEST(Campaign, ReportJson) {
  CampaignOptions o;
  o.max_n = 5;
  const Json j = to_json(run_campaign("theorem-3", o));
  for (const char* key : {"property", "family", "status", "instances", "checks", "failures",
                          "undecided", "wall_seconds"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["status"], "pass");
}
