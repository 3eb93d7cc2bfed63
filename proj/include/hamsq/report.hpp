#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hamsq {

enum class ReportStatus { kPass, kFail, kUndecided };

std::string to_string(ReportStatus s);

// One instance that did not confirm the property. `status` is "fail" for a
// confirmed violation (search exhausted) and "undecided" for a budget abort.
struct Failure {
  std::string graph6;
  std::vector<int> tuple;
  std::string status;
  std::string detail;

  friend bool operator==(const Failure&, const Failure&) = default;
  friend auto operator<=>(const Failure&, const Failure&) = default;
};

struct PropertyReport {
  std::string property;
  std::string family;
  std::uint64_t instances = 0;  // graphs examined
  std::uint64_t checks = 0;     // (graph, tuple) searches
  std::vector<Failure> failures;
  std::uint64_t undecided = 0;
  double wall_seconds = 0.0;
  // Expected negatives confirmed by exhaustive search (negative campaigns).
  std::vector<Failure> counterexamples;
  std::map<std::string, std::uint64_t> stats;

  // Empty failures means pass; any confirmed failure means fail.
  ReportStatus status() const;
  void merge(const PropertyReport& other);
};

}  // namespace hamsq
