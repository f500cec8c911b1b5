#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sylvester::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kInput = 3, kNumerical = 4 };

/// Runs the tool on argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sylvester::cli
