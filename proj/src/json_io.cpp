#include "hamsq/json_io.hpp"

#include <algorithm>
#include <map>

#include "hamsq/checkers.hpp"
#include "hamsq/error.hpp"
#include "hamsq/graph6.hpp"
#include "hamsq/harness.hpp"

namespace hamsq {

namespace {

const char* kind_name(Constraint::Kind k) {
  switch (k) {
    case Constraint::Kind::kGEdgeAt:
      return "g_edge_at";
    case Constraint::Kind::kRequiredEdge:
      return "required_edge";
    case Constraint::Kind::kGEdgeOrNeighborPair:
      return "g_edge_or_neighbor_pair";
  }
  return "?";
}

Constraint::Kind kind_from(const std::string& s) {
  if (s == "g_edge_at") return Constraint::Kind::kGEdgeAt;
  if (s == "required_edge") return Constraint::Kind::kRequiredEdge;
  if (s == "g_edge_or_neighbor_pair") return Constraint::Kind::kGEdgeOrNeighborPair;
  fail(ErrorCode::kParse, "unknown constraint kind '" + s + "'");
}

Json edges_json(const std::vector<Edge>& es) {
  Json a = Json::array();
  for (Edge e : es) a.push_back(to_json(e));
  return a;
}

Edge edge_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) fail(ErrorCode::kParse, "edge must be a pair");
  return Edge(j[0].get<int>(), j[1].get<int>());
}

Json outcome_json(ReportStatus s) { return to_string(s); }

ReportStatus from_status(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound:
      return ReportStatus::kPass;
    case SearchStatus::kExhausted:
      return ReportStatus::kFail;
    case SearchStatus::kUndecided:
      return ReportStatus::kUndecided;
  }
  return ReportStatus::kFail;
}

// Worst of two outcomes: fail > undecided > pass.
ReportStatus worst(ReportStatus a, ReportStatus b) {
  auto rank = [](ReportStatus s) {
    return s == ReportStatus::kFail ? 2 : s == ReportStatus::kUndecided ? 1 : 0;
  };
  return rank(a) >= rank(b) ? a : b;
}

void need_tuple(const std::vector<int>& t, std::size_t n, const std::string& prop) {
  if (t.size() != n) {
    fail(ErrorCode::kInvalidArgument,
         prop + " expects a tuple of length " + std::to_string(n));
  }
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

Json to_json(Edge e) { return Json::array({e.u, e.v}); }

Json to_json(const HamWitness& w) {
  Json j;
  j["graph6"] = graph6_encode(w.host);
  j["closed"] = w.closed;
  j["sequence"] = w.sequence;
  j["omitted"] = w.omitted.to_vector();
  if (!w.spec.closed) {
    j["from"] = w.spec.from;
    j["to"] = w.spec.to;
  }
  Json cs = Json::array();
  for (const Constraint& c : w.spec.constraints) {
    Json cj;
    cj["kind"] = kind_name(c.kind);
    if (c.kind == Constraint::Kind::kRequiredEdge) {
      cj["edge"] = to_json(c.edge);
    } else {
      cj["vertex"] = c.vertex;
    }
    if (c.kind == Constraint::Kind::kGEdgeAt) cj["count"] = c.count;
    if (!c.exclusive) cj["exclusive"] = false;
    cs.push_back(cj);
  }
  j["constraints"] = cs;
  Json sat = Json::object();
  for (const auto& [id, s] : w.satisfied) {
    Json sj;
    sj["edges"] = edges_json(s.edges);
    sj["neighbor_pair"] = s.neighbor_pair;
    sat[std::to_string(id)] = sj;
  }
  j["satisfied"] = sat;
  return j;
}

HamWitness witness_from_json(const Json& j) {
  try {
    HamWitness w;
    w.host = graph6_decode(j.at("graph6").get<std::string>());
    w.closed = j.at("closed").get<bool>();
    w.sequence = j.at("sequence").get<std::vector<int>>();
    for (int v : j.at("omitted").get<std::vector<int>>()) w.omitted.insert(v);
    w.spec.closed = w.closed;
    if (!w.closed) {
      w.spec.from = j.at("from").get<int>();
      w.spec.to = j.at("to").get<int>();
    }
    for (const Json& cj : j.at("constraints")) {
      Constraint c;
      c.kind = kind_from(cj.at("kind").get<std::string>());
      if (c.kind == Constraint::Kind::kRequiredEdge) {
        c.edge = edge_from(cj.at("edge"));
      } else {
        c.vertex = cj.at("vertex").get<int>();
      }
      if (c.kind == Constraint::Kind::kGEdgeAt) c.count = cj.at("count").get<int>();
      c.exclusive = cj.value("exclusive", true);
      w.spec.constraints.push_back(c);
    }
    for (const auto& [key, sj] : j.at("satisfied").items()) {
      ConstraintWitness s;
      for (const Json& e : sj.at("edges")) s.edges.push_back(edge_from(e));
      s.neighbor_pair = sj.at("neighbor_pair").get<bool>();
      w.satisfied[std::stoi(key)] = s;
    }
    return w;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParse, std::string("witness JSON: ") + e.what());
  }
}

Json to_json(const HamSearchResult& r) {
  Json j;
  j["status"] = to_string(r.status);
  j["nodes"] = r.nodes;
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j;
}

Json to_json(const EpsDecomposition& s) {
  Json j;
  j["type"] = "eps";
  j["graph6"] = graph6_encode(s.host);
  j["eulerian"] = edges_json(s.eul.edges());
  j["forest"] = edges_json(s.forest.edges());
  Json deg = Json::array();
  for (int v = 0; v < s.host.order(); ++v) deg.push_back(forest_degree(s.forest, v));
  j["forest_degree"] = deg;
  return j;
}

Json to_json(const JepsDecomposition& s) {
  Json j;
  j["type"] = "jeps";
  j["graph6"] = graph6_encode(s.host);
  j["from"] = s.from;
  j["to"] = s.to;
  j["trail"] = edges_json(s.trail);
  j["eulerian"] = edges_json(s.eul.edges());
  j["forest"] = edges_json(s.forest.edges());
  return j;
}

Json to_json(const BlockDecomposition& d) {
  Json j;
  Json bs = Json::array();
  for (const Block& b : d.blocks) {
    Json bj;
    bj["vertices"] = b.vertices.to_vector();
    bj["edges"] = edges_json(b.edges);
    bj["bridge"] = b.is_bridge();
    bs.push_back(bj);
  }
  j["blocks"] = bs;
  j["cutvertices"] = d.cutvertices.to_vector();
  j["chain_order"] = d.chain_order ? Json(*d.chain_order) : Json(nullptr);
  j["chain_cutvertices"] = d.chain_cutvertices;
  j["endblocks"] = d.endblocks();
  return j;
}

Json to_json(const PropertyReport& r) {
  Json j;
  j["property"] = r.property;
  j["family"] = r.family;
  j["status"] = to_string(r.status());
  j["instances"] = r.instances;
  j["checks"] = r.checks;
  j["undecided"] = r.undecided;
  j["wall_seconds"] = r.wall_seconds;
  auto failures = [](const std::vector<Failure>& fs) {
    Json a = Json::array();
    for (const Failure& f : fs) {
      a.push_back({{"graph6", f.graph6},
                   {"tuple", f.tuple},
                   {"status", f.status},
                   {"detail", f.detail}});
    }
    return a;
  };
  j["failures"] = failures(r.failures);
  j["counterexamples"] = failures(r.counterexamples);
  j["stats"] = r.stats;
  return j;
}

Json run_check(const Graph& g, const std::string& property, const std::vector<int>& tuple,
               std::uint64_t budget, ReportStatus& outcome) {
  SearchOptions opt;
  opt.node_budget = budget;
  std::string p = strip(property);
  static const std::map<std::string, std::string> aliases = {
      {"endpointpath", "theorem2"}, {"f3edgepath", "theoremf"},
      {"vw1w2cycle", "lemma3"},     {"chainpaths", "corollary1"},
      {"edgetwovertices", "corollary2"}, {"dichotomy", "theorema"},
      {"dtendblock", "theoremg"},
  };
  if (auto it = aliases.find(p); it != aliases.end()) p = it->second;
  Json j;
  j["graph6"] = graph6_encode(g);
  j["tuple"] = tuple;
  auto single = [&](const HamSearchResult& r) {
    outcome = from_status(r.status);
    j["search"] = to_json(r);
  };
  if (p == "fk" || (p.size() >= 2 && p[0] == 'f' &&
                    std::all_of(p.begin() + 1, p.end(), ::isdigit))) {
    // k follows the tuple length; the digit in the id is not binding.
    j["requested"] = property;
    j["property"] = "f" + std::to_string(tuple.size());
    single(check_fk(g, tuple, opt));
  } else if (p == "theorem4") {
    need_tuple(tuple, 4, property);
    j["property"] = "theorem-4";
    single(check_fk(g, tuple, opt));
  } else if (p == "strongf3" || p == "theorem3") {
    need_tuple(tuple, 4, property);
    j["property"] = "strong-f3";
    single(check_strong_f3(g, tuple[0], tuple[1], tuple[2], tuple[3], opt));
  } else if (p == "theorem2") {
    need_tuple(tuple, 2, property);
    j["property"] = "theorem-2";
    const HamSearchResult r = check_theorem2(g, tuple[0], tuple[1], opt);
    single(r);
    if (r.witness) {
      j["branch"] = r.witness->satisfied.at(1).neighbor_pair ? "neighbor_pair" : "g_edge_at_y";
    }
  } else if (p == "theoremf") {
    need_tuple(tuple, 3, property);
    j["property"] = "theorem-f";
    single(check_endpoint_edge(g, tuple[0], tuple[1], tuple[2], opt));
  } else if (p == "theoreme" || p == "vwcycle" || p == "lemma3") {
    if (tuple.size() < 2) fail(ErrorCode::kInvalidArgument, property + " expects v,w,...");
    if (p == "theoreme") need_tuple(tuple, 2, property);
    if (p == "lemma3") need_tuple(tuple, 3, property);
    j["property"] = p == "theoreme" ? "theorem-e" : p == "lemma3" ? "lemma-3" : "vw-cycle";
    const std::vector<int> ws(tuple.begin() + 1, tuple.end());
    single(check_vw_ham_cycle(g, tuple[0], ws, opt));
  } else if (p == "lemma2" || p == "apex") {
    need_tuple(tuple, 4, property);
    j["property"] = "lemma-2";
    j["hypotheses_hold"] = apex_hypotheses(g, tuple[0], tuple[1], tuple[2], tuple[3]);
    single(check_apex_hc(g, tuple[0], tuple[1], tuple[2], tuple[3], opt));
  } else if (p == "corollary1") {
    need_tuple(tuple, 2, property);
    j["property"] = "corollary-1";
    const ChainWitnesses r = check_corollary1(g, tuple[0], tuple[1], opt);
    j["cycle"] = to_json(r.cycle);
    j["path"] = to_json(r.path);
    j["two_edges_at_v"] = r.strengthened;
    outcome = worst(from_status(r.cycle.status), from_status(r.path.status));
  } else if (p == "corollary2") {
    need_tuple(tuple, 4, property);
    j["property"] = "corollary-2";
    single(check_corollary2(g, Edge(tuple[0], tuple[1]), tuple[2], tuple[3], opt));
  } else if (p == "fbar") {
    need_tuple(tuple, 0, property);
    j["property"] = "fbar";
    const auto t = fbar_triple(g);
    j["triple"] = t ? Json(*t) : Json(nullptr);
    outcome = t ? ReportStatus::kPass : ReportStatus::kFail;
  } else if (p == "theorema") {
    need_tuple(tuple, 2, property);
    j["property"] = "theorem-a";
    try {
      const EpsOrJeps r = theorem_a(g, tuple[0], tuple[1]);
      j["decomposition"] = std::visit([](const auto& s) { return to_json(s); }, r);
      outcome = ReportStatus::kPass;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTheoremViolation) throw;
      j["decomposition"] = nullptr;
      j["detail"] = e.what();
      outcome = ReportStatus::kFail;
    }
  } else if (p == "theoremg") {
    need_tuple(tuple, 2, property);
    j["property"] = "theorem-g";
    try {
      const DtEndblock r = dt_endblock_edge(g, tuple[0], tuple[1]);
      j["edge"] = to_json(r.edge);
      j["block"] = r.block.vertices.to_vector();
      j["cutvertex"] = r.cutvertex;
      outcome = ReportStatus::kPass;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTheoremViolation) throw;
      j["detail"] = e.what();
      outcome = ReportStatus::kFail;
    }
  } else {
    fail(ErrorCode::kInvalidArgument, "unknown property '" + property + "'");
  }
  j["status"] = outcome_json(outcome);
  return j;
}

Json run_eps(const Graph& g, const Json& request, std::uint64_t budget,
             ReportStatus& outcome) {
  const EpsSearchOptions opt{budget};
  Json j;
  j["graph6"] = graph6_encode(g);
  try {
    const std::string mode = request.value("mode", std::string("eps"));
    j["mode"] = mode;
    if (mode == "eps") {
      EpsRequest req;
      if (request.contains("root") && !request["root"].is_null()) {
        req.root = request["root"].get<int>();
      }
      req.light = request.value("light", std::vector<int>{});
      if (request.contains("cycle") && !request["cycle"].is_null()) {
        req.required_cycle = request["cycle"].get<std::vector<int>>();
      }
      const EpsResult r = find_eps(g, req, opt);
      j["search_status"] = to_string(r.status);
      j["decomposition"] = r.eps ? to_json(*r.eps) : Json(nullptr);
      outcome = from_status(r.status);
    } else if (mode == "jeps") {
      const std::vector<int> forbid = request.value("forbid", std::vector<int>{});
      const JepsResult r =
          find_jeps(g, request.at("v").get<int>(), request.at("w").get<int>(), forbid, opt);
      j["search_status"] = to_string(r.status);
      j["decomposition"] = r.jeps ? to_json(*r.jeps) : Json(nullptr);
      outcome = from_status(r.status);
    } else if (mode == "theorem-a") {
      const EpsOrJeps r = theorem_a(g, request.at("v").get<int>(), request.at("w").get<int>());
      j["decomposition"] = std::visit([](const auto& s) { return to_json(s); }, r);
      outcome = ReportStatus::kPass;
    } else {
      fail(ErrorCode::kInvalidArgument, "unknown eps mode '" + mode + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kInvalidArgument, std::string("eps request: ") + e.what());
  }
  j["status"] = outcome_json(outcome);
  return j;
}

}  // namespace hamsq
