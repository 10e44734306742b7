#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace maxgenus::cli {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Output goes to `out` unless --out is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxgenus::cli
