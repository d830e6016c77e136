#pragma once

#include <iosfwd>

namespace lensreeb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
/// Invariant violation, CONTRADICTION or INFEASIBLE verdict.
inline constexpr int kExitNegative = 2;

/// Entry point for the `lensreeb` tool; subcommands cr, toric, cz, hc, ellipsoid, certify, sweep.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lensreeb::cli
