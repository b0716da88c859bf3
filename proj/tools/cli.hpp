#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quadfactor {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitInput = 2 };

/// Runs the command line `args` (program name first) against the given
/// streams and returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadfactor
