// Acceptance gate: runs every acceptance criterion and prints exactly
// one PASS/FAIL line per criterion.  Exits nonzero if any criterion fails.

#include <cstdio>

#include "tkg/verify.hpp"

int main() {
  const auto results = tkg::run_all_criteria();
  int failures = 0;
  for (const auto& r : results) {
    std::printf("%s  criterion %2d  %s — %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str());
    if (!r.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
              results.size());
  return failures == 0 ? 0 : 1;
}
