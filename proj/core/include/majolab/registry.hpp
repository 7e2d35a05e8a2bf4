#pragma once

#include <string>
#include <vector>

#include "majolab/matrix.hpp"
#include "majolab/piecewise.hpp"
#include "majolab/trial_report.hpp"

namespace majolab {

/// One published counterexample instance: input matrices and function
/// transcribed digit for digit, plus the quantities the source prints for
/// them. Tolerances reflect the print precision of each quantity.
struct ExpectedQuantity {
    std::string id;
    double value;
    double tol;
};

struct RegistryCase {
    std::string case_id;
    std::string checker_id;
    std::vector<std::pair<std::string, HermitianMatrix>> matrices;
    PiecewiseFn fn;
    std::vector<ExpectedQuantity> expected;
    std::vector<std::string> expected_true_flags;
};

const std::vector<RegistryCase>& registry();

/// Throws DomainError for unknown ids.
const RegistryCase& registry_case(const std::string& case_id);

/// Recompute every expected quantity of a case. The report's margin is
/// max over quantities of (|computed - expected| - tol); it passes when the
/// margin is <= 0 and every expected flag came out true.
TrialReport reproduce(const std::string& case_id);

bool reproduce_passed(const TrialReport& r);

}  // namespace majolab
