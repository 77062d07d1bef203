#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kkbounds::cli {

// Exit codes: 0 success, 1 negative mathematical verdict, 2 usage or input
// error, 3 internal failure.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kkbounds::cli
