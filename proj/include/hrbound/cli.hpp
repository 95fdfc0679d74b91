#ifndef HRBOUND_CLI_HPP
#define HRBOUND_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hrb {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitValidation = 2, kExitHypothesis = 3, kExitNumeric = 4 };

/// Runs the tool on `args` (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hrb

#endif
