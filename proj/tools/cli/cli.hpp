#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qshuffle::cli {

/// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). The output format
/// defaults to $QSHUFFLE_FORMAT, then text.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qshuffle::cli
