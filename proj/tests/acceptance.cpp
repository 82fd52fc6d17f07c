// Desk-scale verification suite; one pass/fail line per criterion.
#include <iostream>

#include "braidgen/verify.hpp"

int main() {
    const auto results = braidgen::verify::run_acceptance(std::cout);
    int failed = 0;
    for (const auto& r : results)
        if (!r.passed) ++failed;
    if (failed) {
        std::cout << failed << " of " << results.size() << " checks failed\n";
        return 1;
    }
    std::cout << "all " << results.size() << " checks passed\n";
    return 0;
}
