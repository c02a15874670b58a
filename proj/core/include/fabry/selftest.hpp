#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fabry {

// One acceptance criterion outcome.  Details are (label, value) pairs so the
// emitted JSON is deterministic for a fixed seed; no timing data lives here.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::vector<std::pair<std::string, double>> details;
};

struct SelftestReport {
  std::uint64_t seed = 1;
  bool all_pass = false;
  std::vector<CriterionResult> criteria;
};

// Runs the full acceptance suite (criteria 1..11; the determinism criterion
// is checked by callers via byte comparison of two serialized runs).
SelftestReport run_selftest(std::uint64_t seed);

}  // namespace fabry
