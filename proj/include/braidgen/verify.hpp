#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidgen::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    std::string detail;
};

/// Runs the desk-scale verification suite, printing one pass/fail line per
/// check to `out`.
std::vector<CheckResult> run_acceptance(std::ostream& out);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace braidgen::verify
