#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace strahler::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

// Runs the command line given without the program name. TREE and PATH
// arguments may be "-" to read them from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace strahler::cli
