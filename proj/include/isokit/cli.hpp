#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace isokit {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitPrecondition = 2,
  kExitCap = 3,
  kExitInvariant = 4,
};

/// Runs the tool on `args` (program name excluded), writing results to out
/// (or the --out file) and diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isokit
