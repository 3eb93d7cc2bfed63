#include <gtest/gtest.h>

#include <string>

#include "hamsq/hamsq.h"
#include "json.hpp"

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { hamsq_string_free(p); }
  std::string s() const { return p ? p : ""; }
  nlohmann::json json() const { return nlohmann::json::parse(s()); }
};

struct G {
  hamsq_graph* p = nullptr;
  ~G() { hamsq_graph_free(p); }
};

}  // namespace

TEST(CApi, Graph6RoundTrip) {
  G g;
  ASSERT_EQ(hamsq_graph_from_graph6("D]o", &g.p), HAMSQ_OK);
  EXPECT_EQ(hamsq_graph_order(g.p), 5);
  EXPECT_EQ(hamsq_graph_size(g.p), 6);
  Str out;
  ASSERT_EQ(hamsq_graph_to_graph6(g.p, &out.p), HAMSQ_OK);
  EXPECT_EQ(out.s(), "D]o");
}

TEST(CApi, Errors) {
  G g;
  EXPECT_EQ(hamsq_graph_from_graph6("B!", &g.p), HAMSQ_PARSE);
  EXPECT_NE(std::string(hamsq_last_error()), "");
  EXPECT_EQ(hamsq_graph_from_graph6(nullptr, &g.p), HAMSQ_NULL);
  EXPECT_EQ(hamsq_graph_builtin("k2m:3", &g.p), HAMSQ_INVALID_ARGUMENT);
  EXPECT_EQ(hamsq_graph_builtin("wheel:5", &g.p), HAMSQ_INVALID_ARGUMENT);
  EXPECT_EQ(hamsq_graph_builtin("cycle:x", &g.p), HAMSQ_PARSE);
  const int loop[] = {0, 0};
  EXPECT_EQ(hamsq_graph_from_edges(3, loop, 1, &g.p), HAMSQ_INVALID_ARGUMENT);
  EXPECT_EQ(g.p, nullptr);
  EXPECT_EQ(hamsq_graph_order(nullptr), -1);
  hamsq_graph_free(nullptr);
}

TEST(CApi, BuiltinsAndSquare) {
  G h, sq;
  ASSERT_EQ(hamsq_graph_builtin("h:8,5", &h.p), HAMSQ_OK);
  EXPECT_EQ(hamsq_graph_order(h.p), 9);
  EXPECT_EQ(hamsq_graph_size(h.p), 10);
  G c;
  ASSERT_EQ(hamsq_graph_builtin("cycle:5", &c.p), HAMSQ_OK);
  ASSERT_EQ(hamsq_graph_square(c.p, &sq.p), HAMSQ_OK);
  EXPECT_EQ(hamsq_graph_size(sq.p), 10);
  const int edges[] = {0, 1, 1, 2, 2, 0};
  G k3;
  ASSERT_EQ(hamsq_graph_from_edges(3, edges, 3, &k3.p), HAMSQ_OK);
  Str s;
  ASSERT_EQ(hamsq_graph_to_graph6(k3.p, &s.p), HAMSQ_OK);
  EXPECT_EQ(s.s(), "Bw");
}

TEST(CApi, Blocks) {
  G g;
  ASSERT_EQ(hamsq_graph_from_graph6("Dhc", &g.p), HAMSQ_OK);
  Str out;
  ASSERT_EQ(hamsq_blocks_json(g.p, &out.p), HAMSQ_OK);
  const auto j = out.json();
  EXPECT_EQ(j["graph6"], "Dhc");
  EXPECT_TRUE(j.contains("blocks"));
  G disc;
  ASSERT_EQ(hamsq_graph_from_edges(3, nullptr, 0, &disc.p), HAMSQ_OK);
  Str bad;
  EXPECT_EQ(hamsq_blocks_json(disc.p, &bad.p), HAMSQ_PRECONDITION);
}

TEST(CApi, CheckOutcomes) {
  G k23;
  ASSERT_EQ(hamsq_graph_builtin("k2m:5", &k23.p), HAMSQ_OK);
  const int tuple[] = {0, 1, 2, 3, 4};
  hamsq_outcome o = HAMSQ_PASS;
  Str a;
  ASSERT_EQ(hamsq_check_json(k23.p, "f5", tuple, 5, 0, &o, &a.p), HAMSQ_OK);
  EXPECT_EQ(o, HAMSQ_FAIL);
  EXPECT_EQ(a.json()["status"], "fail");
  Str b;
  ASSERT_EQ(hamsq_check_json(k23.p, "f5", tuple, 5, 2, &o, &b.p), HAMSQ_OK);
  EXPECT_EQ(o, HAMSQ_UNDECIDED);
  Str c;
  ASSERT_EQ(hamsq_check_json(k23.p, "f4", tuple, 4, 0, &o, &c.p), HAMSQ_OK);
  EXPECT_EQ(o, HAMSQ_PASS);
  const auto w = c.json()["search"]["witness"];
  EXPECT_EQ(w["graph6"], "D]o");
  EXPECT_TRUE(w.contains("sequence"));
  EXPECT_TRUE(w.contains("satisfied"));
  Str d;
  EXPECT_EQ(hamsq_check_json(k23.p, "nope", tuple, 2, 0, &o, &d.p), HAMSQ_INVALID_ARGUMENT);
  Str e;
  G p;
  const int path[] = {0, 1, 1, 2};
  ASSERT_EQ(hamsq_graph_from_edges(3, path, 2, &p.p), HAMSQ_OK);
  EXPECT_EQ(hamsq_check_json(p.p, "f3", tuple, 3, 0, &o, &e.p), HAMSQ_PRECONDITION);
}

TEST(CApi, Eps) {
  G k4;
  ASSERT_EQ(hamsq_graph_builtin("complete:4", &k4.p), HAMSQ_OK);
  hamsq_outcome o = HAMSQ_FAIL;
  Str a;
  ASSERT_EQ(hamsq_eps_json(k4.p, R"({"mode":"eps","root":0,"light":[1]})", 0, &o, &a.p),
            HAMSQ_OK);
  EXPECT_EQ(o, HAMSQ_PASS);
  EXPECT_EQ(a.json()["decomposition"]["type"], "eps");
  Str b;
  ASSERT_EQ(hamsq_eps_json(k4.p, R"({"mode":"jeps","v":0,"w":1,"forbid":[0,1]})", 0, &o, &b.p),
            HAMSQ_OK);
  EXPECT_EQ(o, HAMSQ_PASS);
  Str c;
  EXPECT_EQ(hamsq_eps_json(k4.p, "{not json", 0, &o, &c.p), HAMSQ_PARSE);
  Str d;
  EXPECT_EQ(hamsq_eps_json(k4.p, R"({"mode":"zzz"})", 0, &o, &d.p), HAMSQ_INVALID_ARGUMENT);
}

TEST(CApi, VerifyAndCounterexamples) {
  hamsq_verify_options opt;
  hamsq_verify_options_init(&opt);
  opt.max_n = 5;
  hamsq_outcome o = HAMSQ_FAIL;
  Str a;
  ASSERT_EQ(hamsq_verify_json("theorem4", &opt, &o, &a.p), HAMSQ_OK);
  EXPECT_EQ(o, HAMSQ_PASS);
  EXPECT_EQ(a.json()["property"], "theorem-4");
  Str b;
  EXPECT_EQ(hamsq_verify_json("nope", &opt, &o, &b.p), HAMSQ_INVALID_ARGUMENT);
  const int ks[] = {5};
  const int hs[] = {8, 5};
  Str c;
  ASSERT_EQ(hamsq_counterexamples_json("k2m", ks, 1, nullptr, 0, nullptr, &o, &c.p), HAMSQ_OK);
  EXPECT_EQ(o, HAMSQ_PASS);
  EXPECT_EQ(c.json()["counterexamples"].size(), 1U);
  Str d;
  ASSERT_EQ(hamsq_counterexamples_json("h", nullptr, 0, hs, 1, nullptr, &o, &d.p), HAMSQ_OK);
  EXPECT_EQ(o, HAMSQ_PASS);
  Str e;
  EXPECT_EQ(hamsq_counterexamples_json("zzz", nullptr, 0, nullptr, 0, nullptr, &o, &e.p),
            HAMSQ_INVALID_ARGUMENT);
}
