#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace swkb::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 1,
  kNumerical = 2,
  kViolation = 3,  // a checked condition missed its tolerance
};

/// Runs one subcommand (catalog, check, solve, pct, natanzon, pdm). `args`
/// excludes the program name. Reports go to `out` unless --output is given;
/// diagnostics go to `err` as single lines.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace swkb::cli
