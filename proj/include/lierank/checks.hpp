#pragma once

#include <string>
#include <vector>

namespace lierank {

struct CheckResult {
  std::string name;
  std::string description;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct CheckOptions {
  /// Substring filter on check names; empty runs everything.
  std::string only;
  /// Negative control: drop one root from the E8 realization.
  bool corrupt_e8 = false;
  int table_rank_cap = 5;
};

std::vector<std::string> check_names();
std::vector<CheckResult> run_checks(const CheckOptions& opts);

}  // namespace lierank
