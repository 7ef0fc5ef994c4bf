#pragma once

#include <string>
#include <vector>

namespace gwalab {

/// 0: all checks pass; 1: a verified property failed; 2: parse or usage error; 3: inapplicable.
struct CommandResult {
  int exit_code = 0;
  std::string output;
};

/// Runs one command line (without the program name) and captures its report.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace gwalab
