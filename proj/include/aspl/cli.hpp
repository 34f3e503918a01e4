#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aspl {

// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,         // usage or parse error
  kExitDisconnected = 3,  // input graph not connected
  kExitViolation = 4,     // a non-audit relation was violated
};

// Runs the tool with `args` (program name excluded).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aspl
