#include <cstdio>

#include "osc3d/checks.hpp"

// standalone acceptance gate: one line per criterion, nonzero exit if any
// criterion fails
int main() {
    const auto results = osc3d::run_acceptance_checks();
    bool all_passed = true;
    for (std::size_t k = 0; k < results.size(); ++k) {
        const auto& res = results[k];
        std::printf("[%2zu/%zu] %s %s (%s)\n", k + 1, results.size(),
                    res.passed ? "PASS" : "FAIL", res.name.c_str(), res.detail.c_str());
        all_passed = all_passed && res.passed;
    }
    return all_passed ? 0 : 1;
}
