#pragma once

#include <string>
#include <vector>

namespace lll {

struct CheckResult {
  std::string name;
  double measured;   // worst case over the sampled instances
  double tolerance;
  bool pass;
};

/// Structural and analytic invariant battery. Random instances are drawn
/// from a generator seeded with `seed` so reruns are bit-identical.
std::vector<CheckResult> run_selftest(unsigned seed = 0);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace lll
