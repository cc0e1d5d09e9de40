#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wzlab::cli {

/// Exit statuses shared by every subcommand.
enum ExitStatus : int {
  kAllPassed = 0,
  kVerdictFailure = 1,
  kUsageError = 2,
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit status. Reports go to `out` unless -o is given;
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wzlab::cli
