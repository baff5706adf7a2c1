#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mnl::cli {

enum ExitCode : int { kPass = 0, kViolation = 1, kInputError = 2 };

/// Runs one `mnl` invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mnl::cli
