#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace awggn::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kNonConvergence = 2,
    kVerificationFailure = 3,
};

/// Inclusive sweep start..stop with the given step, always emitted ascending.
struct Sweep {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    /// Parses "start:stop:step", "start:stop" (step 1) or a single value.
    static Sweep parse(const std::string& text);

    /// Grid values, ascending, snapped to 1e-12 so that e.g. 0.5 + 15·0.1 is
    /// exactly 2.
    std::vector<double> values() const;
};

/// Formats a value with 9 significant digits.
std::string format_value(double value);

/// Runs the command line `args` (without the program name). CSV and reports go
/// to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace awggn::cli
