#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qmf {

// One named identity/property check.  Hard checks gate the suite; report-only
// checks surface measured constants and never fail the run.
struct CheckResult {
    std::string id;
    std::string description;
    int criterion = 0;  // grouping index for the acceptance runner
    bool hard = true;
    bool passed = false;
    std::string lhs, rhs, details;
};

// Smallest precision at which every membership certificate in the suite has
// its required ten surplus coefficients (the quasimodular weight-18 basis has
// twelve monomials).
unsigned verification_min_precision();

// Runs the whole built-in identity suite at the given precision and seed.
// Throws insufficient_precision below verification_min_precision().
std::vector<CheckResult> run_verification_suite(unsigned prec, uint64_t seed);

bool all_hard_checks_passed(const std::vector<CheckResult>& results);

}  // namespace qmf
