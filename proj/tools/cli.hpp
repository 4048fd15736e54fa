#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibcube::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kUsageError = 2,
  kRejectedCertificate = 3,
};

/// Runs the `fibcube` command line. `args` excludes the program name.
/// `in` feeds `verify -`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace fibcube::cli
