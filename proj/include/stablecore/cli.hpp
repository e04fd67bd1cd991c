#pragma once

#include <iosfwd>

namespace stablecore::cli {

/// Process exit codes; stable for scripting.
enum ExitCode : int {
  kOk = 0,
  kParse = 2,
  kStability = 3,
  kGd = 4,
  kCertification = 5,
};

/// Entry point of the `stablecore` tool, with the streams injectable for tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stablecore::cli
