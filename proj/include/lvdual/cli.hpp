#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace lvd {

inline constexpr std::string_view kToolVersion = "0.1.0";

struct RunOptions {
  bool color = false;  ///< colour the one-line status summary on `err`
};

/// Runs one command (arguments without the program name) and writes the JSON
/// report to `out` in one piece. Returns 0 when every verdict passes, 1 on a
/// verification failure and 2 on an input or usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                const RunOptions& options = {});

/// The report text with its "timing_ms" field removed, for golden comparisons.
std::string strip_timing(std::string_view report);

}  // namespace lvd
