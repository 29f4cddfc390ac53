#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace convcodes::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // valid input, negative answer
inline constexpr int kUsage = 2;    // bad flags, unreadable or malformed files

// Runs the tool with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace convcodes::cli
