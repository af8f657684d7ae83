#pragma once

#include "atanforge/scalar.hpp"

// Shared 60-digit context for the unit tests; every test case applies it so
// the thread default precision is predictable regardless of run order.
inline const atanforge::PrecisionContext& test_ctx() {
    static const atanforge::PrecisionContext ctx = atanforge::PrecisionContext::make(60);
    ctx.apply();
    return ctx;
}

inline atanforge::Scalar tol(int e) { return pow(atanforge::Scalar(10), -e); }

#define CHECK_NEAR(a, b, t) CHECK(abs((a) - (b)) <= (t))
