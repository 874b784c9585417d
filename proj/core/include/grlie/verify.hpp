#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grlie {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Names and ids of the acceptance criteria, in order.
std::vector<std::pair<int, std::string>> acceptance_criteria();

// Run the full acceptance suite (or the listed criterion ids).  Each
// criterion is exact: integer/rational equality, no tolerances.
std::vector<CriterionResult> run_acceptance_suite(
    std::uint64_t seed = 12345, const std::vector<int>& only = {});

}  // namespace grlie
