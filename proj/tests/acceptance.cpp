// Acceptance gate: runs the full verification suite at 60 digits and prints
// one PASS/FAIL line per criterion. Exit status 0 iff every criterion passed.

#include <cstdlib>
#include <iostream>

#include "atanforge/suite.hpp"

int main() {
    using namespace atanforge;
    auto ctx = PrecisionContext::make(60);
    ctx.apply();
    SuiteResult result = run_suite(ctx, 20260823ULL, &std::cout);

    std::cout << "\n==== acceptance summary ====\n";
    for (const auto& c : result.criteria) {
        std::cout << (c.pass ? "PASS" : "FAIL") << "  criterion " << c.index << ": "
                  << c.title << "  (" << c.checks << " checks, " << c.failures
                  << " failures)\n";
    }
    std::cout << "overall: " << (result.all_pass() ? "PASS" : "FAIL") << "\n";
    return result.all_pass() ? EXIT_SUCCESS : EXIT_FAILURE;
}
