#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "hamsq/blocks.hpp"
#include "hamsq/eps.hpp"
#include "hamsq/ham_search.hpp"
#include "hamsq/report.hpp"

namespace hamsq {

using Json = nlohmann::ordered_json;

Json to_json(Edge e);
Json to_json(const HamWitness& w);
Json to_json(const HamSearchResult& r);
Json to_json(const EpsDecomposition& s);
Json to_json(const JepsDecomposition& s);
Json to_json(const BlockDecomposition& d);
Json to_json(const PropertyReport& r);

// Rebuilds a witness from to_json output; throws Error(kParse) on bad input.
HamWitness witness_from_json(const Json& j);

// Single-instance property check used by the C API and CLI. Property ids
// accept the campaign spellings plus f<k>/fk, strong-f3, vw-cycle, apex and
// fbar. `outcome` receives pass / fail / undecided.
Json run_check(const Graph& g, const std::string& property, const std::vector<int>& tuple,
               std::uint64_t budget, ReportStatus& outcome);

// Decomposition request: {"mode": "eps", "root", "light", "cycle"},
// {"mode": "jeps", "v", "w", "forbid"} or {"mode": "theorem-a", "v", "w"}.
Json run_eps(const Graph& g, const Json& request, std::uint64_t budget,
             ReportStatus& outcome);

}  // namespace hamsq
