#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kwsym {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitCap = 2 };

/// Runs one command. `args` excludes the program name. Results go to out,
/// diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kwsym
