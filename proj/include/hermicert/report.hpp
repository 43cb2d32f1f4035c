#pragma once

#include <string>
#include <vector>

#include "hermicert/verdict.hpp"

namespace hermicert {

/// Outcome of one CLI invocation. `machine` mirrors `human` and is
/// byte-deterministic for a fixed argv and seed (no wall-clock content).
struct run_result {
  int exit_code = 0;
  std::string human;
  json machine;
};

/// Parses and executes one command line (without the program name).
/// Never throws: errors become exit codes 2 (malformed input) or
/// 3 (reconciliation failure) with the message in `human`.
run_result run_command(const std::vector<std::string>& args);

/// main() adapter: prints the human report, optionally writes the machine
/// report, returns the exit code.
int run_cli(int argc, char** argv);

}  // namespace hermicert
