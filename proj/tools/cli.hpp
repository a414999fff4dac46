#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitfusion::cli {

enum ExitCode : int {
  kSuccess = 0,
  kViolations = 1,
  kUsageError = 2,
  kInternalError = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbitfusion::cli
