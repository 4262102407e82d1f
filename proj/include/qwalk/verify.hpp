#pragma once

#include <string>
#include <vector>

namespace qwalk {

struct CheckResult {
  std::string name;
  bool pass = false;
  double time_ms = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  int failures() const;
  bool all_pass() const { return failures() == 0; }
};

// Cross-oracle and invariant suite over every module. quick targets under a
// minute, full under five; full widens sizes (more groups, p, random draws).
VerifyReport run_verify(bool full);

}  // namespace qwalk
