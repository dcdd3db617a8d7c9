// SPDX-License-Identifier: MIT
//
// Exhaustive cross-validation over a parameter grid.  Each check replays one
// of the classification's internal consistency statements (orbit prediction
// vs. graph equality, extension soundness, strata counts, codimensions,
// admissibility, localization) and reports exact counterexamples.

#pragma once

#include <set>
#include <string>
#include <vector>

#include "hamcirc/action.hpp"

namespace hamcirc {

struct SweepConfig {
    long long max_ab = 6;  // |a|, |b| range, gcd(a,b) = 1
    long long max_m = 6;
    std::vector<Rat> lambdas;
    std::set<std::string> checks;

    /// The six known check names.
    static const std::set<std::string>& known_checks();
    /// Full grid defaults: max 6/6, lambdas {1,3/2,2,5/2,3,7/2}, all checks.
    static SweepConfig defaults();
};

struct SweepFailure {
    std::string check;
    std::string detail;
};

struct SweepResult {
    long long cases_checked = 0;
    long long actions_visited = 0;
    std::vector<SweepFailure> failures;

    bool ok() const { return failures.empty(); }
};

/// Runs every enabled check over the whole grid.  Throws invalid_input on a
/// malformed config (unknown check, empty check set, lambda below every
/// manifold's bound).
SweepResult run_sweep(const SweepConfig& cfg);

/// Counts plus the first 10 counterexamples, ready to print.
std::string sweep_summary(const SweepResult& r);

}  // namespace hamcirc
