#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccsp {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitUsage = 2,
  kExitBound = 3,
};

/// Runs the command line `args` (without the program name).  `in` feeds the
/// interactive `step` command.  Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace ccsp
