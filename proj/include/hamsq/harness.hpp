#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hamsq/graph.hpp"
#include "hamsq/report.hpp"

namespace hamsq {

// K_{2,k-2} with the two high-degree vertices labelled 0 and 1. k < 5 is
// accepted; `flagged` is set because the graph is then not a counterexample.
Graph build_k2m(int k, bool* flagged = nullptr);

struct HExample {
  Graph graph;
  int v = -1;   // apex
  int w1 = -1;  // v_1
  int w2 = -1;  // v_k
};

// Cycle v_1..v_n (vertices 0..n-1) plus apex v = n joined to v_1 and v_k.
// Requires k >= 5 and n >= k + 3.
HExample build_h_example(int n, int k);

struct CampaignOptions {
  int min_n = 0;  // 0 selects the property's default range
  int max_n = 0;
  int jobs = 1;
  std::uint64_t budget = 0;  // search node budget, 0 = unlimited
  // Results cache path; empty falls back to $HAMSQ_CACHE, then to no cache.
  std::string cache_path;
  std::vector<int> ks;                        // k2m-negative
  std::vector<std::pair<int, int>> h_params;  // h-negative (n, k)
};

// Known property ids, in a stable order.
const std::vector<std::string>& campaign_properties();

// Accepts ids with or without hyphens ("theorem4" == "theorem-4"); returns
// the canonical id or throws Error(kInvalidArgument).
std::string normalize_property(const std::string& id);

PropertyReport run_campaign(const std::string& property,
                            const CampaignOptions& options = {});

}  // namespace hamsq
