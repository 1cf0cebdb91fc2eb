#pragma once

#include <iosfwd>

namespace sdc {

/// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/**
 * Entry point of the `sdc` tool with subcommands construct, verify, search,
 * lift and report. Normal output goes to `out`, diagnostics to `err`.
 */
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sdc
