#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace recurquot::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kNegativeVerdict = 1,  // a well-posed question answered "no"
  kInputError = 2,
  kResourceLimit = 3,
};

/// Runs one invocation; `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace recurquot::cli
