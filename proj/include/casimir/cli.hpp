#pragma once

#include <ostream>
#include <span>
#include <string>

namespace casimir::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // computation failed (domain error, non-convergence)
inline constexpr int kExitUsage = 2;    // bad flags, conflicting inputs, unreadable files

/// Entry point of `casimir-aniso`. `args[0]` is the program name. Results go
/// to `out` (or the --output file); diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace casimir::cli
