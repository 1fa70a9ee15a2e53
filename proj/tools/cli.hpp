// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it with in-memory streams.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zinb::cli {

enum ExitCode : int {
  kOk = 0,
  kMathFailure = 1,
  kUsage = 2,
  kInternal = 3,
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zinb::cli
