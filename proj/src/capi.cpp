#include "hamsq/hamsq.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "hamsq/blocks.hpp"
#include "hamsq/error.hpp"
#include "hamsq/graph.hpp"
#include "hamsq/graph6.hpp"
#include "hamsq/harness.hpp"
#include "hamsq/json_io.hpp"

struct hamsq_graph {
  hamsq::Graph g;
};

namespace {

thread_local std::string last_error;

hamsq_status code_of(hamsq::ErrorCode c) {
  switch (c) {
    case hamsq::ErrorCode::kInvalidArgument:
      return HAMSQ_INVALID_ARGUMENT;
    case hamsq::ErrorCode::kParse:
      return HAMSQ_PARSE;
    case hamsq::ErrorCode::kPrecondition:
      return HAMSQ_PRECONDITION;
    case hamsq::ErrorCode::kTheoremViolation:
      return HAMSQ_THEOREM_VIOLATION;
    case hamsq::ErrorCode::kInternal:
      return HAMSQ_INTERNAL;
  }
  return HAMSQ_INTERNAL;
}

template <class F>
hamsq_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return HAMSQ_OK;
  } catch (const hamsq::Error& e) {
    last_error = e.what();
    return code_of(e.code());
  } catch (const nlohmann::json::parse_error& e) {
    last_error = e.what();
    return HAMSQ_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return HAMSQ_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HAMSQ_INTERNAL;
  }
}

hamsq_status null_arg(const char* what) {
  last_error = std::string(what) + " is NULL";
  return HAMSQ_NULL;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

hamsq_outcome outcome_of(hamsq::ReportStatus s) {
  switch (s) {
    case hamsq::ReportStatus::kPass:
      return HAMSQ_PASS;
    case hamsq::ReportStatus::kFail:
      return HAMSQ_FAIL;
    case hamsq::ReportStatus::kUndecided:
      return HAMSQ_UNDECIDED;
  }
  return HAMSQ_FAIL;
}

hamsq_outcome worst(hamsq_outcome a, hamsq_outcome b) {
  auto rank = [](hamsq_outcome o) { return o == HAMSQ_FAIL ? 2 : o == HAMSQ_UNDECIDED ? 1 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

hamsq_graph* wrap(hamsq::Graph g) { return new hamsq_graph{std::move(g)}; }

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = s.find(',', pos);
    const std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) {
      hamsq::fail(hamsq::ErrorCode::kParse, "bad integer '" + tok + "'");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

hamsq::Graph builtin(const std::string& name) {
  using hamsq::ErrorCode;
  const std::size_t colon = name.find(':');
  if (colon == std::string::npos) {
    hamsq::fail(ErrorCode::kInvalidArgument, "builtin needs the form name:args");
  }
  const std::string kind = name.substr(0, colon);
  const std::vector<int> args = parse_ints(name.substr(colon + 1));
  auto want = [&](std::size_t k) {
    if (args.size() != k) {
      hamsq::fail(ErrorCode::kInvalidArgument,
                  "builtin " + kind + " takes " + std::to_string(k) + " argument(s)");
    }
  };
  if (kind == "k2m") {
    want(1);
    return hamsq::build_k2m(args[0]);
  }
  if (kind == "h") {
    want(2);
    return hamsq::build_h_example(args[0], args[1]).graph;
  }
  if (kind == "cycle") {
    want(1);
    return hamsq::cycle_graph(args[0]);
  }
  if (kind == "complete") {
    want(1);
    return hamsq::complete_graph(args[0]);
  }
  hamsq::fail(ErrorCode::kInvalidArgument, "unknown builtin '" + kind + "'");
}

hamsq::CampaignOptions campaign_options(const hamsq_verify_options* o) {
  hamsq::CampaignOptions c;
  if (o != nullptr) {
    c.min_n = o->min_n;
    c.max_n = o->max_n;
    c.jobs = o->jobs > 0 ? o->jobs : 1;
    c.budget = o->budget;
    if (o->cache_path != nullptr) c.cache_path = o->cache_path;
  }
  return c;
}

}  // namespace

extern "C" {

const char* hamsq_last_error(void) { return last_error.c_str(); }

void hamsq_string_free(char* s) { std::free(s); }

const char* hamsq_version(void) { return "1.0.0"; }

hamsq_status hamsq_graph_from_graph6(const char* text, hamsq_graph** out) {
  if (text == nullptr) return null_arg("text");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = wrap(hamsq::graph6_decode(text)); });
}

hamsq_status hamsq_graph_from_edges(int n, const int* edges, size_t m, hamsq_graph** out) {
  if (out == nullptr) return null_arg("out");
  if (edges == nullptr && m > 0) return null_arg("edges");
  return guarded([&] {
    std::vector<hamsq::Edge> es;
    for (size_t i = 0; i < m; ++i) es.emplace_back(edges[2 * i], edges[2 * i + 1]);
    *out = wrap(hamsq::Graph(n, es));
  });
}

hamsq_status hamsq_graph_builtin(const char* name, hamsq_graph** out) {
  if (name == nullptr) return null_arg("name");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = wrap(builtin(name)); });
}

void hamsq_graph_free(hamsq_graph* g) { delete g; }

int hamsq_graph_order(const hamsq_graph* g) { return g == nullptr ? -1 : g->g.order(); }

int hamsq_graph_size(const hamsq_graph* g) { return g == nullptr ? -1 : g->g.size(); }

hamsq_status hamsq_graph_to_graph6(const hamsq_graph* g, char** out) {
  if (g == nullptr) return null_arg("graph");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = dup(hamsq::graph6_encode(g->g)); });
}

hamsq_status hamsq_graph_square(const hamsq_graph* g, hamsq_graph** out) {
  if (g == nullptr) return null_arg("graph");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = wrap(hamsq::square(g->g)); });
}

hamsq_status hamsq_blocks_json(const hamsq_graph* g, char** out) {
  if (g == nullptr) return null_arg("graph");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    hamsq::Json j{{"graph6", hamsq::graph6_encode(g->g)}};
    j.update(hamsq::to_json(hamsq::blocks(g->g)));
    *out = dup(j.dump(2));
  });
}

hamsq_status hamsq_eps_json(const hamsq_graph* g, const char* request, uint64_t budget,
                            hamsq_outcome* outcome, char** out) {
  if (g == nullptr) return null_arg("graph");
  if (request == nullptr) return null_arg("request");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    hamsq::Json req;
    try {
      req = hamsq::Json::parse(request);
    } catch (const nlohmann::json::parse_error& e) {
      hamsq::fail(hamsq::ErrorCode::kParse, std::string("request: ") + e.what());
    }
    hamsq::ReportStatus s = hamsq::ReportStatus::kFail;
    const hamsq::Json j = hamsq::run_eps(g->g, req, budget, s);
    if (outcome != nullptr) *outcome = outcome_of(s);
    *out = dup(j.dump(2));
  });
}

hamsq_status hamsq_check_json(const hamsq_graph* g, const char* property, const int* tuple,
                              size_t tuple_len, uint64_t budget, hamsq_outcome* outcome,
                              char** out) {
  if (g == nullptr) return null_arg("graph");
  if (property == nullptr) return null_arg("property");
  if (tuple == nullptr && tuple_len > 0) return null_arg("tuple");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    const std::vector<int> t(tuple, tuple + tuple_len);
    hamsq::ReportStatus s = hamsq::ReportStatus::kFail;
    const hamsq::Json j = hamsq::run_check(g->g, property, t, budget, s);
    if (outcome != nullptr) *outcome = outcome_of(s);
    *out = dup(j.dump(2));
  });
}

void hamsq_verify_options_init(hamsq_verify_options* options) {
  if (options == nullptr) return;
  options->min_n = 0;
  options->max_n = 0;
  options->jobs = 1;
  options->budget = 0;
  options->cache_path = nullptr;
}

hamsq_status hamsq_verify_json(const char* property, const hamsq_verify_options* options,
                               hamsq_outcome* outcome, char** out) {
  if (property == nullptr) return null_arg("property");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    const hamsq::CampaignOptions c = campaign_options(options);
    hamsq_outcome o = HAMSQ_PASS;
    hamsq::Json j;
    if (std::string(property) == "all") {
      j = hamsq::Json::array();
      for (const std::string& id : hamsq::campaign_properties()) {
        const hamsq::PropertyReport r = hamsq::run_campaign(id, c);
        o = worst(o, outcome_of(r.status()));
        j.push_back(hamsq::to_json(r));
      }
    } else {
      const hamsq::PropertyReport r = hamsq::run_campaign(property, c);
      o = outcome_of(r.status());
      j = hamsq::to_json(r);
    }
    if (outcome != nullptr) *outcome = o;
    *out = dup(j.dump(2));
  });
}

hamsq_status hamsq_counterexamples_json(const char* suite, const int* ks, size_t ks_len,
                                        const int* hs, size_t hs_len,
                                        const hamsq_verify_options* options,
                                        hamsq_outcome* outcome, char** out) {
  if (suite == nullptr) return null_arg("suite");
  if (ks == nullptr && ks_len > 0) return null_arg("ks");
  if (hs == nullptr && hs_len > 0) return null_arg("hs");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    hamsq::CampaignOptions c = campaign_options(options);
    c.ks.assign(ks, ks + ks_len);
    for (size_t i = 0; i < hs_len; ++i) c.h_params.emplace_back(hs[2 * i], hs[2 * i + 1]);
    const std::string s = suite;
    std::vector<std::string> ids;
    if (s == "k2m" || s == "all") ids.push_back("k2m-negative");
    if (s == "h" || s == "all") ids.push_back("h-negative");
    if (s == "fbar" || s == "all") ids.push_back("fbar-negative");
    if (ids.empty()) {
      hamsq::fail(hamsq::ErrorCode::kInvalidArgument, "unknown suite '" + s + "'");
    }
    hamsq_outcome o = HAMSQ_PASS;
    hamsq::Json j = hamsq::Json::array();
    for (const std::string& id : ids) {
      const hamsq::PropertyReport r = hamsq::run_campaign(id, c);
      o = worst(o, outcome_of(r.status()));
      j.push_back(hamsq::to_json(r));
    }
    if (outcome != nullptr) *outcome = o;
    *out = dup((ids.size() == 1 ? j[0] : j).dump(2));
  });
}

}  // extern "C"
