// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace origami::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNoSolution = 1,  // also a failed verdict
  kInvalidInput = 2,
  kNumericalFailure = 3,
};

// Runs one command. `args` excludes the program name. JSON goes to `out`
// (or --json PATH), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace origami::cli
