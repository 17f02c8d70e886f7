#pragma once

#include <string>
#include <vector>

#include "fockdyn/scenario/config.hpp"

namespace fockdyn::scenario {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Invariant suite for the configured model: Hermiticity, decomposition
/// residuals, norm and energy conservation, symmetry of Omega, and so on.
std::vector<CheckResult> run_checks(const ScenarioConfig& cfg);

}  // namespace fockdyn::scenario
