#ifndef JETMOD_TOOLS_CLI_HPP
#define JETMOD_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace jetmod::cli {

/// Exit codes shared by every verb.
inline constexpr int kVerified = 0;
inline constexpr int kViolations = 1;
inline constexpr int kUsage = 2;

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, errors to `err`, both as JSON.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jetmod::cli

#endif  // JETMOD_TOOLS_CLI_HPP
