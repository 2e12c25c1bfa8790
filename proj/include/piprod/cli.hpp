#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace piprod::cli {

enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2, numerical_failure = 3 };

/// Parse and execute one command. `args` excludes the program name.
/// Nothing is written to std::cout or std::cerr directly.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace piprod::cli
