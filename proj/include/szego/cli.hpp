#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace szego::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerifyFailed = 3;

/// The subcommand grammar, printed on usage errors.
std::string grammar();

/// Runs one command line (without the program name). Records go to `out`;
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace szego::cli
