#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace meetimp {

// The checked reproduction suite behind `meetimp selftest` and the
// acceptance test binary. Each criterion pins its own tolerances, corpus
// sizes and time bound; pass/fail is decided here, reporting elsewhere.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double time_limit = 0.0;
  std::string detail;  // multi-line; first line is a one-line summary
};

CriterionResult run_criterion(int id, std::uint64_t seed);
std::vector<CriterionResult> run_all_criteria(std::uint64_t seed);
constexpr int kCriterionCount = 8;

}  // namespace meetimp
