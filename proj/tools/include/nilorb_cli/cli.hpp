#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace nilorb::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240917;
inline constexpr int kDefaultTrials = 20;
/// Directory for documents when --output is not given; unset means stdout.
inline constexpr const char* kOutputDirEnv = "NILORB_OUTPUT_DIR";

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs one command line (without argv[0]). The document goes to `out`, or
/// to a file when --output or the environment variable selects one.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilorb::cli
