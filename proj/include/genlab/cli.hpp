#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace genlab {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,         // C(m) holds / equivalent / success
  kExitNegative = 1,   // C(m) fails / not equivalent
  kExitUsage = 2,      // bad flags or unparsable input
  kExitInconclusive = 3,
  kExitCapExceeded = 4,
};

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace genlab
