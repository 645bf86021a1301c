#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rootspace::cli {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

/// Runs one command line (without the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rootspace::cli
