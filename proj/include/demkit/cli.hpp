#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace demkit {

/// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Subcommands: dem, gen, cover, verify, compare. Reports go to `out` (or the
/// -o file), diagnostics to `err`.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace demkit
