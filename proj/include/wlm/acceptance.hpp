#pragma once

// The release gate: ten checks covering the exact decomposition identity,
// the classical kernel facts it rests on, the two-sided L1 band, the exact
// lower-bound witnesses, the variation functionals, the convergence and
// divergence curves, transform equivalences, and the weak-type experiments.
// Thresholds are pinned; each check reports the realized value next to its
// bound.

#include <iosfwd>
#include <string>
#include <vector>

namespace wlm::acceptance {

struct CriterionResult {
    std::string id;      // "C1".."C10"
    std::string title;
    bool pass = false;
    std::string detail;  // realized values vs pinned bounds
};

std::vector<CriterionResult> run_all();

// Prints one PASS/FAIL line per criterion; returns the number of failures.
int report(std::ostream& os);

}  // namespace wlm::acceptance
