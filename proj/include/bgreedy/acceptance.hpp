#pragma once

#include <string>
#include <vector>

namespace bgreedy {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The end-to-end verification checks: golden Brownian-bridge runs, rate
/// fits, the determinant identity, the factor bound sweep, and the
/// inequality certificates on the example runs. Used both by the
/// acceptance test suite and by the CLI verify subcommand.
std::vector<CheckResult> run_acceptance_checks();

}  // namespace bgreedy
