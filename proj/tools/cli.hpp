#pragma once

#include <ostream>

namespace qsim::cli {

inline constexpr const char* kVersion = "qsim 1.0.0";

/// Exit codes: 0 success, 1 usage or input error, 2 algorithmic failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;

/// Parses argv (argv[0] is the program name), runs the subcommand and writes
/// its report to `out`; diagnostics go to `err`.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qsim::cli
