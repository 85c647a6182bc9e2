#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace degcomp {

// Exit codes of run().
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand. args excludes the program name. Machine-readable
// output goes to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace degcomp
