#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homlab::cli {

enum ExitCode : int { kOk = 0, kRefuted = 1, kUsage = 2, kInternal = 3 };

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homlab::cli
