#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace afrob::cli {

/// Process exit statuses.
enum ExitStatus : int {
  kSuccess = 0,
  kUsageError = 1,
  kParseError = 2,
  kSizeLimit = 3,
  kInternalError = 4,
};

inline constexpr const char* kSchema = "afrob/1";

/// Runs the command line `args` (program name excluded). `in` backs
/// `--input -`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace afrob::cli
