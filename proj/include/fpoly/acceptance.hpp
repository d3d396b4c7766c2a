#pragma once

#include <string>
#include <vector>

namespace fpoly {

struct CriterionResult {
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

// Runs the acceptance criteria (all of them, or those whose name contains
// `only`). Each criterion is exact: integer/rational arithmetic, tolerance
// zero. Seeds are fixed constants so runs are reproducible.
std::vector<CriterionResult> run_acceptance(const std::string& only = "");

}  // namespace fpoly
