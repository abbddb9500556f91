#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace albert::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,  // bad flags, unreadable files, malformed JSON
  kUnknownFamily = 3,
  kNotHermitian = 4,
};

/// Runs the tool on argv-style arguments (args[0] is the program name).
/// JSON documents go to `out`, summaries and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace albert::cli
