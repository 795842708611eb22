#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sumset {

/// Exit codes of run_command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand (gen, stats, check, embed, dissoc, extract,
/// stability, sweep, fuzz). `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumset
