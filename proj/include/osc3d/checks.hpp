#pragma once

#include <string>
#include <vector>

namespace osc3d {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

// full numerical gate: every tolerance is pinned here, not configurable;
// used both by the check subcommand and the standalone acceptance runner
std::vector<CheckResult> run_acceptance_checks();

}  // namespace osc3d
