#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pmech::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, input_error = 2, math_error = 3 };

/// Runs `pm` with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pmech::cli
