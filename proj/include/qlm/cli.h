#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qlm {

enum class OutputFormat { kCsv, kJson, kPretty };

/// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// `out`, diagnostics to `err`. Without --format, output is a pretty table
/// when `out_is_terminal` and CSV otherwise.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            bool out_is_terminal);

}  // namespace qlm
