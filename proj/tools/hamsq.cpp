// hamsq command-line front end. Talks to the library only through hamsq.h.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hamsq/hamsq.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUndecided = 3;
constexpr int kExitInternal = 4;

struct GraphFree {
  void operator()(hamsq_graph* g) const { hamsq_graph_free(g); }
};
using GraphPtr = std::unique_ptr<hamsq_graph, GraphFree>;

struct Failure {
  int exit_code;
};

int exit_for(hamsq_status s) {
  switch (s) {
    case HAMSQ_OK:
      return kExitPass;
    case HAMSQ_THEOREM_VIOLATION:
      return kExitFail;
    case HAMSQ_INTERNAL:
      return kExitInternal;
    default:
      return kExitUsage;
  }
}

int exit_for(hamsq_outcome o) {
  switch (o) {
    case HAMSQ_PASS:
      return kExitPass;
    case HAMSQ_UNDECIDED:
      return kExitUndecided;
    default:
      return kExitFail;
  }
}

// Exit code priority when several graphs are processed.
int combine(int a, int b) {
  auto rank = [](int c) {
    switch (c) {
      case kExitPass:
        return 0;
      case kExitUndecided:
        return 1;
      case kExitFail:
        return 2;
      default:
        return 3;
    }
  };
  return rank(a) >= rank(b) ? a : b;
}

void check(hamsq_status s) {
  if (s == HAMSQ_OK) return;
  std::cerr << "hamsq: " << hamsq_last_error() << "\n";
  throw Failure{exit_for(s)};
}

std::string take(char* s) {
  std::string out = s != nullptr ? s : "";
  hamsq_string_free(s);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string int_list_json(const std::vector<int>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "]";
}

struct Source {
  std::string graph6;
  std::string file;
  std::string builtin;
};

struct Loaded {
  std::vector<GraphPtr> graphs;
  bool many = false;  // --file: output is an array
};

Loaded load(const Source& src) {
  const int given = !src.graph6.empty() + !src.file.empty() + !src.builtin.empty();
  if (given != 1) {
    std::cerr << "hamsq: exactly one of --graph, --file, --builtin is required\n";
    throw Failure{kExitUsage};
  }
  Loaded out;
  hamsq_graph* g = nullptr;
  auto add = [&](hamsq_status s) {
    check(s);
    out.graphs.emplace_back(g);
    g = nullptr;
  };
  if (!src.graph6.empty()) {
    add(hamsq_graph_from_graph6(src.graph6.c_str(), &g));
  } else if (!src.builtin.empty()) {
    add(hamsq_graph_builtin(src.builtin.c_str(), &g));
  } else {
    std::ifstream in(src.file);
    if (!in) {
      std::cerr << "hamsq: cannot open " << src.file << "\n";
      throw Failure{kExitUsage};
    }
    out.many = true;
    std::string line;
    while (std::getline(in, line)) {
      line = trim(line);
      if (line.empty() || line[0] == '#') continue;
      add(hamsq_graph_from_graph6(line.c_str(), &g));
    }
  }
  return out;
}

class Output {
 public:
  explicit Output(std::string path) : path_(std::move(path)) {}
  void emit(const std::string& text) {
    if (path_.empty()) {
      std::cout << text << "\n";
      return;
    }
    std::ofstream f(path_);
    if (!(f << text << "\n")) {
      std::cerr << "hamsq: cannot write " << path_ << "\n";
      throw Failure{kExitUsage};
    }
  }

 private:
  std::string path_;
};

std::string join_array(const std::vector<std::string>& items) {
  std::string s = "[";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ",\n" : "\n") + items[i];
  return s + "\n]";
}

// Runs `one` on every loaded graph; a single graph prints its object, a
// file prints an array.
template <class F>
int per_graph(const Source& src, Output& out, F&& one) {
  Loaded loaded = load(src);
  int code = kExitPass;
  std::vector<std::string> docs;
  for (const GraphPtr& g : loaded.graphs) {
    auto [text, c] = one(g.get());
    docs.push_back(std::move(text));
    code = combine(code, c);
  }
  out.emit(loaded.many ? join_array(docs) : docs.front());
  return code;
}

std::pair<int, int> parse_pair(const std::string& s) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(s);
    std::size_t a = 0, b = 0;
    const int n = std::stoi(s.substr(0, comma), &a);
    const int k = std::stoi(s.substr(comma + 1), &b);
    if (a != comma || b != s.size() - comma - 1) throw std::invalid_argument(s);
    return {n, k};
  } catch (const std::exception&) {
    std::cerr << "hamsq: --h expects n,k, got '" << s << "'\n";
    throw Failure{kExitUsage};
  }
}

void add_source(CLI::App* cmd, Source& src) {
  cmd->add_option("--graph,-g", src.graph6, "graph6 string");
  cmd->add_option("--file,-f", src.file, "file with one graph6 per line");
  cmd->add_option("--builtin,-b", src.builtin, "k2m:<k>, h:<n>,<k>, cycle:<n>, complete:<n>");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian cycles in squares of graphs: checks, decompositions, campaigns"};
  app.require_subcommand(1);
  app.fallthrough();

  Source src;
  std::string output;
  std::uint64_t budget = 0;
  app.add_option("--output,-o", output, "write JSON here instead of stdout");

  auto* sq = app.add_subcommand("square", "square of a graph");
  add_source(sq, src);

  auto* bl = app.add_subcommand("blocks", "block decomposition");
  add_source(bl, src);

  auto* ep = app.add_subcommand("eps", "EPS / JEPS decomposition search");
  add_source(ep, src);
  std::string mode = "eps";
  std::optional<int> root, v, w;
  std::vector<int> light, cycle, forbid;
  std::string request;
  ep->add_option("--mode", mode, "eps, jeps or theorem-a")
      ->check(CLI::IsMember({"eps", "jeps", "theorem-a"}));
  ep->add_option("--root", root, "vertex with forest degree 0");
  ep->add_option("--light", light, "vertices with forest degree <= 1")->delimiter(',');
  ep->add_option("--cycle", cycle, "cycle to keep in the eulerian part")->delimiter(',');
  ep->add_option("-v,--v", v, "trail start (jeps, theorem-a)");
  ep->add_option("-w,--w", w, "trail end (jeps, theorem-a)");
  ep->add_option("--forbid", forbid, "vertices with forest degree 0 (jeps)")->delimiter(',');
  ep->add_option("--request", request, "raw JSON request (overrides the flags above)");
  ep->add_option("--budget", budget, "search node budget, 0 = unlimited");

  auto* ck = app.add_subcommand("check", "single-instance property check");
  add_source(ck, src);
  std::string property;
  std::vector<int> tuple;
  ck->add_option("--property,-p", property, "property id, e.g. f4, strong-f3, vw-cycle")->required();
  ck->add_option("--tuple,-t", tuple, "comma-separated 0-based vertices")->delimiter(',');
  ck->add_option("--budget", budget, "search node budget, 0 = unlimited");

  hamsq_verify_options vopt;
  hamsq_verify_options_init(&vopt);
  std::string cache;
  auto add_campaign_flags = [&](CLI::App* cmd) {
    cmd->add_option("--min-n", vopt.min_n, "smallest order (0 = default)");
    cmd->add_option("--max-n", vopt.max_n, "largest order (0 = default)");
    cmd->add_option("--jobs,-j", vopt.jobs, "worker threads");
    cmd->add_option("--budget", budget, "search node budget, 0 = unlimited");
    cmd->add_option("--cache", cache, "results cache file (default: $HAMSQ_CACHE)");
  };

  auto* vf = app.add_subcommand("verify", "exhaustive campaign");
  std::string vprop = "all";
  vf->add_option("--property,-p", vprop, "campaign id or 'all'");
  add_campaign_flags(vf);

  auto* cx = app.add_subcommand("counterexamples", "known negative examples");
  std::string suite = "all";
  std::vector<int> ks;
  std::vector<std::string> hs;
  cx->add_option("--suite", suite, "k2m, h, fbar or all")
      ->check(CLI::IsMember({"k2m", "h", "fbar", "all"}));
  cx->add_option("--k", ks, "k values for k2m")->delimiter(',');
  cx->set_help_flag("--help", "Print this help message and exit");
  cx->add_option("--h", hs, "n,k pairs for h (repeatable)");
  add_campaign_flags(cx);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Output out(output);
  try {
    if (*sq) {
      return per_graph(src, out, [](hamsq_graph* g) {
        hamsq_graph* s = nullptr;
        check(hamsq_graph_square(g, &s));
        GraphPtr held(s);
        char* a = nullptr;
        char* b = nullptr;
        check(hamsq_graph_to_graph6(g, &a));
        const std::string in6 = take(a);
        check(hamsq_graph_to_graph6(s, &b));
        const std::string sq6 = take(b);
        std::ostringstream os;
        os << "{\n  \"graph6\": \"" << in6 << "\",\n  \"order\": " << hamsq_graph_order(g)
           << ",\n  \"size\": " << hamsq_graph_size(g) << ",\n  \"square\": \"" << sq6
           << "\",\n  \"square_size\": " << hamsq_graph_size(s) << "\n}";
        return std::pair{os.str(), kExitPass};
      });
    }
    if (*bl) {
      return per_graph(src, out, [](hamsq_graph* g) {
        char* s = nullptr;
        check(hamsq_blocks_json(g, &s));
        return std::pair{take(s), kExitPass};
      });
    }
    if (*ep) {
      std::string req = request;
      if (req.empty()) {
        std::ostringstream os;
        os << "{\"mode\":\"" << mode << "\"";
        if (mode == "eps") {
          if (root) os << ",\"root\":" << *root;
          os << ",\"light\":" << int_list_json(light);
          if (!cycle.empty()) os << ",\"cycle\":" << int_list_json(cycle);
        } else {
          if (!v || !w) {
            std::cerr << "hamsq: --mode " << mode << " needs -v and -w\n";
            return kExitUsage;
          }
          os << ",\"v\":" << *v << ",\"w\":" << *w;
          if (mode == "jeps") os << ",\"forbid\":" << int_list_json(forbid);
        }
        os << "}";
        req = os.str();
      }
      return per_graph(src, out, [&](hamsq_graph* g) {
        char* s = nullptr;
        hamsq_outcome o = HAMSQ_FAIL;
        check(hamsq_eps_json(g, req.c_str(), budget, &o, &s));
        return std::pair{take(s), exit_for(o)};
      });
    }
    if (*ck) {
      return per_graph(src, out, [&](hamsq_graph* g) {
        char* s = nullptr;
        hamsq_outcome o = HAMSQ_FAIL;
        check(hamsq_check_json(g, property.c_str(), tuple.data(), tuple.size(), budget, &o, &s));
        return std::pair{take(s), exit_for(o)};
      });
    }
    vopt.budget = budget;
    if (!cache.empty()) vopt.cache_path = cache.c_str();
    if (*vf) {
      char* s = nullptr;
      hamsq_outcome o = HAMSQ_FAIL;
      check(hamsq_verify_json(vprop.c_str(), &vopt, &o, &s));
      out.emit(take(s));
      return exit_for(o);
    }
    if (*cx) {
      std::vector<int> flat;
      for (const std::string& h : hs) {
        const auto [n, k] = parse_pair(h);
        flat.push_back(n);
        flat.push_back(k);
      }
      char* s = nullptr;
      hamsq_outcome o = HAMSQ_FAIL;
      check(hamsq_counterexamples_json(suite.c_str(), ks.data(), ks.size(), flat.data(),
                                       flat.size() / 2, &vopt, &o, &s));
      out.emit(take(s));
      return exit_for(o);
    }
  } catch (const Failure& f) {
    return f.exit_code;
  }
  return kExitUsage;
}
