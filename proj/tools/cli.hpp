#ifndef SPEEDSHARE_TOOLS_CLI_HPP
#define SPEEDSHARE_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace speedshare::cli {

/// Process exit statuses. Stable across versions.
enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,  // parse or validation error, bad flags
  kCheckFailed = 2,   // a verification assertion failed
  kCapExceeded = 3,   // exhaustive search refused
};

/// Runs the tool with `args` (args[0] is the program name), writing
/// documents to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace speedshare::cli

#endif  // SPEEDSHARE_TOOLS_CLI_HPP
