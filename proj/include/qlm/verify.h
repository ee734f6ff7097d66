#pragma once

#include <string>
#include <vector>

namespace qlm {

struct CheckResult {
  std::string name;
  double max_defect = 0.0;
  double tolerance = 0.0;
  bool passed() const { return max_defect < tolerance; }
};

/// Cross-checks every independent evaluation route against the closed-form
/// optimum for n = 1..n_cap: brute-force trace norm, POVM assembly,
/// projection amplitudes, plus completeness and kernel consistency checks.
std::vector<CheckResult> run_verification(int n_cap);

}  // namespace qlm
