#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotalt {

enum ExitCode : int { kSuccess = 0, kInputError = 1, kConsistencyError = 2 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotalt
