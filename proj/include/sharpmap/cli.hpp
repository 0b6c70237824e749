#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sharpmap::cli {

enum ExitCode : int {
  ok = 0,
  assertion_failed = 1,
  usage_error = 2,
  budget_exhausted = 3,
  uniqueness_fails = 4,
};

/// Runs one subcommand. `args` excludes the program name. The Report (or
/// the markdown table for `gaps table --format markdown`) goes to `out`,
/// diagnostics and the grammar to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sharpmap::cli
