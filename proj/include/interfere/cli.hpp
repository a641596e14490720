#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace interfere::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kBudget = 3,
  kInput = 4,
};

/// Runs one subcommand (args excludes the program name). JSON goes to out,
/// human-readable diagnostics to err.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace interfere::cli
