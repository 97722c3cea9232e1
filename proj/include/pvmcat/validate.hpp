#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "pvmcat/errata.hpp"
#include "pvmcat/wigner.hpp"

namespace pvmcat {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ValidateConfig {
    int dim = 64;
    Tolerances tol;
    unsigned seed = 20240811;  // drives the randomized property draws, fixed by default
};

// The full invariant suite: operator algebra, state construction, the kappa and
// moment cross-checks (mismatches land in `errata`, they do not fail the run),
// the R identity, the Gamma = 0 law, Wigner route agreement and bound, and the
// truncation convergence probe.
std::vector<CheckResult> run_validation(const ValidateConfig& config, ErrataRegistry& errata);

// Convenience: print one pass/fail line per check; returns true when all passed.
bool report_validation(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace pvmcat
