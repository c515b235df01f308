#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace urn::cli {

inline constexpr const char* kSchemaVersion = "1";

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kDomainError = 3,
  kMismatch = 4,
  kBudgetExceeded = 5,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`, and an expression given as "-" is read from
/// `in`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace urn::cli
