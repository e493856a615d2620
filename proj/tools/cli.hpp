#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace powercl::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kResourceCap = 3;

// Runs one command line (without the program name). Machine output
// (--format machine) is one JSON object per line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace powercl::cli
