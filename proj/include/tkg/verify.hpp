#pragma once

#include <string>
#include <vector>

namespace tkg {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;  // measured values, counts, or the first mismatch
};

// The executable acceptance suite: every quantity is re-derived through the
// public engines and compared against frozen expected values.  A thrown
// exception fails the owning criterion instead of aborting the run.
std::vector<CriterionResult> run_all_criteria();

}  // namespace tkg
