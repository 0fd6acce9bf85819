#pragma once

#include <iosfwd>
#include <cstddef>
#include <string>
#include <vector>

namespace largecover::cli {

enum ExitCode : int {
  kAnswered = 0,
  kUsage = 1,
  kParse = 2,
  kGuard = 3,
  kHypothesis = 4,
  kSoundness = 5,
  kIo = 6,
};

// Runs one subcommand. The JSON report goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// Same, with args excluding the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Wilson score interval at 95% confidence.
struct Interval {
  double lo = 0;
  double hi = 0;
};
Interval wilson_interval(std::size_t successes, std::size_t runs);

}  // namespace largecover::cli
