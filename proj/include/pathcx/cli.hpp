#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pathcx::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kResourceGuard = 3,
};

/// Runs one command line (args excludes the program name), writing results to
/// `out` and diagnostics to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathcx::cli
