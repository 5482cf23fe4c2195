#ifndef KLINV_TOOLS_CLI_HPP
#define KLINV_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace klinv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. |args| excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace klinv::cli

#endif
