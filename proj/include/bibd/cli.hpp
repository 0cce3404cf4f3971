#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bibd::cli {

/// Exit codes: 0 affirmative verdict or success, 1 negative verdict,
/// 2 usage or I/O error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name. Verdicts go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bibd::cli

namespace bibd {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Reruns the worked examples (profiles, friendship verdicts, class counts,
/// orders) and reports each one.
std::vector<CheckResult> run_selfcheck(int threads = 0);

} // namespace bibd
