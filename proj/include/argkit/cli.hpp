#pragma once

#include <iosfwd>

namespace argkit {

/// Exit codes returned by cli_main.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFinding = 1;  // NOT equivalent, counterexample found, failed check
inline constexpr int kExitUsage = 2;    // usage, parse or input error

/// Runs the argkit command line. Output goes to `out`, diagnostics and
/// usage text to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace argkit
