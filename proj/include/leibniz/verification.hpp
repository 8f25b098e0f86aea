#pragma once

#include "leibniz/census.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace leibniz {

struct VerifyOptions {
  Int max_p = 5;   // cap on the prime grid {2,3,5}
  Int max_m = 4;   // cap on cyclic exponents
  Int max_k = 24;  // cap on the torsion order in the congruence sweep
  std::uint64_t seed = 20250810;
  unsigned jobs = 1;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::string details; // mismatch listings, counts, frozen-value checks
};

// The ten acceptance checks, individually runnable. Each enforces its own
// pinned wall-clock budget where one is stated.
CriterionResult run_criterion(int id, const VerifyOptions& opts = {});
std::vector<CriterionResult> run_all_criteria(const VerifyOptions& opts = {});

std::string criterion_line(const CriterionResult& r);

} // namespace leibniz
