#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace diffops {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitInputError = 2,
  kExitBudget = 3,
};

// Runs one CLI invocation (args exclude the program name). The report goes to `out`
// only when the command succeeds; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diffops
