#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lexiswitch {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitProvider = 2;
inline constexpr int kExitData = 3;

// Runs the `lexiswitch` command line. `args` excludes the program name.
// Subcommands: index-build, rewrite, eval, chat.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace lexiswitch
