#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lnec {

// Exit statuses of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitValidation = 3,
  kExitComputation = 4,
  kExitScanGuard = 5,
};

// Runs one CLI invocation. `args` excludes the program name. Results go to
// `out`; failures write {"error": {...}} to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lnec
