#pragma once

#include <iosfwd>

namespace ct::cli {

enum ExitCode : int { kOk = 0, kVerdictFailed = 1, kUsage = 2, kPrecisionExhausted = 3 };

/// Parses argv, runs one command and writes the report to `out`. Failure
/// lists and diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ct::cli
