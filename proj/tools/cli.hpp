#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcrank::cli {

enum ExitCode : int { ok = 0, usage_error = 1, violation = 2, budget_exceeded = 3 };

/// Runs one command line (without the program name) and returns its exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pcrank::cli
