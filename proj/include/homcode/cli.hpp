#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homcode {

/// Exit codes: 0 success, 1 I/O, 2 domain/validation, 3 budget or regression.
enum ExitCode : int { kExitOk = 0, kExitIo = 1, kExitDomain = 2, kExitBudget = 3 };

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homcode
