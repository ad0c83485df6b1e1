#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "intervox/interval.hpp"

namespace intervox {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitDomain = 3,
  kExitNoSolution = 4,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`, warnings and errors to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "[lo,hi]" or a single number. Throws Error on malformed input.
Interval parse_interval_arg(std::string_view text);

}  // namespace intervox
