#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pyth::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDomainError = 1,
  kUsageError = 2,
};

/// Runs one `pyth` invocation. `args` excludes the program name. Results go
/// to `out`; diagnostics go to `err` (json mode reports domain errors on `out`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pyth::cli
