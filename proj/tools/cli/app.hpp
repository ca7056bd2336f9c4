#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace earcolor::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailedCheck = 1,
  kExitInput = 2,
  kExitResource = 3,
  kExitDefect = 4,
};

// Full command-line entry point. `in` backs the graph path "-".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace earcolor::cli
