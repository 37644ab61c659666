#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minsurf::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitResidualFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line without the program name, e.g. {"verify", "--family", "circle"}.
/// Returns 0 when every verdict passes, 1 on a residual or computation
/// failure, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minsurf::cli
