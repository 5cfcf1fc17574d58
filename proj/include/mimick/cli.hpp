#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mimick::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). Output files
/// named by flags are written directly; everything else goes to out/err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mimick::cli
