#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logdecomp::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitValidation = 2,
  kExitCapacity = 3,
  kExitDisagreement = 4,
  kExitCheckFailed = 5,
};

/// Runs one command line (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logdecomp::cli
