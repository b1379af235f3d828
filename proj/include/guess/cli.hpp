#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace guess {

// Exit codes shared by every subcommand.
inline constexpr int exit_holds = 0;
inline constexpr int exit_counterexample = 1;
inline constexpr int exit_input_error = 2;

// Runs the `guess` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace guess
