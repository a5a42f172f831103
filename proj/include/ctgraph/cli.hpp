#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ctgraph::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kBadInput = 3,
  kBudget = 4,
};

/// Runs one subcommand. `args` excludes the program name. Normal output goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctgraph::cli
