#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spinsync/rb87.hpp"

namespace spinsync {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// The full acceptance battery. Constants are injectable so a deliberately
// perturbed run demonstrates that the regression criteria bite.
std::vector<CriterionResult> run_acceptance_criteria(
    const PhysicalConstants& constants = {});

// Prints one "PASS criterion N: ..." / "FAIL criterion N: ..." line per
// criterion plus a summary; returns the number of failed criteria.
int run_acceptance(std::ostream& out, const PhysicalConstants& constants = {});

} // namespace spinsync
