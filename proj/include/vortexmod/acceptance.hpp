#pragma once

#include <string>
#include <vector>

namespace vortexmod::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double time_limit = 0.0;
};

inline constexpr int criterion_count = 10;

/// Runs one criterion (1..10). Exceptions are caught and reported as failures.
CriterionResult run_criterion(int id);

/// All criteria; fast mode skips the two PDE criteria (9 and 10).
std::vector<CriterionResult> run_acceptance(bool fast);

/// "PASS 3 oracle equivalence: ... (1.23 s)"
std::string format(const CriterionResult& r);

}  // namespace vortexmod::acceptance
