#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace extropy {

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitData = 3, kExitDivergent = 4 };

/// Runs the command line `args` (without the program name), writing reports to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace extropy
