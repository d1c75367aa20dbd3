#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace acx {

/// Exit codes: 0 success or verdict true, 1 verdict false, 2 usage error.
enum ExitCode : int { kExitOk = 0, kExitFalse = 1, kExitUsage = 2 };

/// Runs the command line `args` (without the program name), writing JSON
/// reports to `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace acx
