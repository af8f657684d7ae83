#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "atanforge/scalar.hpp"

namespace atanforge {

/// Outcome of one numbered acceptance criterion.
struct CriterionResult {
    int index = 0;
    std::string title;
    bool pass = true;
    long checks = 0;
    long failures = 0;
    Scalar max_residual;
    std::vector<std::string> failure_notes;  // capped; last entry summarizes overflow
    double elapsed_ms = 0;
};

/// A recorded discrepancy or unproved claim, with the measurement backing it.
struct Finding {
    std::string id;
    std::string statement;
    std::string evidence;
};

struct SuiteResult {
    int digits = 0;
    unsigned long long seed = 0;
    std::vector<CriterionResult> criteria;
    std::vector<Finding> findings;

    bool all_pass() const {
        for (const auto& c : criteria)
            if (!c.pass) return false;
        return true;
    }
};

/// Runs the full acceptance matrix at ctx precision (criterion 9 internally
/// reruns the numeric criteria at 100 digits). Progress lines go to *log when
/// non-null. Findings are informational and never fail the suite by
/// themselves.
SuiteResult run_suite(const PrecisionContext& ctx, unsigned long long seed,
                      std::ostream* log);

}  // namespace atanforge
