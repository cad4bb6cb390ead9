#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cvpg::cli {

// Exit codes.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;           // NO verdict, or a disagreement in certify
inline constexpr int kUsage = 2;        // parse error, class violation, bad flags
inline constexpr int kIncomplete = 3;   // certify: oracle ran out of budget
inline constexpr int kInternal = 4;     // unexpected exception

// args excludes the program name. `in` is read when the input is "-" or
// missing.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cvpg::cli
