#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphdelta::cli {

// Exit statuses are part of the command-line contract.
enum ExitCode : int {
  kOk = 0,
  kInfeasible = 1,
  kParseError = 2,
  kDisconnected = 3,
  kOutOfRange = 4,
  kMismatch = 5,
};

/// Runs the tool with `args` (args[0] is the program name). All output goes
/// to `out` / `err`; returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphdelta::cli
