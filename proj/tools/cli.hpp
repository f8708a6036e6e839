#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace flstego::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kFileError = 3,
  kValidation = 4,
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flstego::cli
