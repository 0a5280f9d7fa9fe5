#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "system_file.hpp"

namespace logdecomp::cli {

struct CheckOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::size_t cases = 0;
  double max_error = 0.0;
  std::string detail;  // first failure, or why the check was skipped
};

/// Runs the invariant suites against the system and `trials` randomized
/// perturbations of it. Deterministic for a fixed seed.
std::vector<CheckResult> run_checks(const SystemFile& system, const CheckOptions& options);

}  // namespace logdecomp::cli
