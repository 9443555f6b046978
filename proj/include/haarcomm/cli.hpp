#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace haarcomm {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "7", "5..8" or "4,6,9" into the list of dimensions.
std::vector<int> parse_dimensions(const std::string& text);

}  // namespace haarcomm
