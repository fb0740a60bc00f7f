#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace syzygy {

// Exit statuses of the command-line driver.
enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,
  kExitFindings = 2,
  kExitUsage = 64,
  kExitParse = 65,
  kExitBudget = 70,
};

// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace syzygy
