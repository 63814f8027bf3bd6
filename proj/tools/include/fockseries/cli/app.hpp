#pragma once

#include <string>
#include <vector>

namespace fockseries::cli {

// Exit statuses of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBadArguments = 2;
inline constexpr int kExitNumericFailure = 3;
inline constexpr int kExitIo = 4;

// Parses `args` (args[0] is the program name) and runs the subcommand.
int run_app(const std::vector<std::string>& args);

}  // namespace fockseries::cli
