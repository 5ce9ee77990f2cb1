#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isolat {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitValidation = 2,
  kExitInternal = 3,
};

/// Runs `isolat <args...>` (args exclude the program name). Results go to
/// `out`; usage text and JSON error records go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isolat
