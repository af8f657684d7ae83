#include "doctest.h"

#include "atanforge/number_theory.hpp"
#include "test_util.hpp"

using namespace atanforge;

TEST_CASE("character values and periodicity") {
    CHECK(chi4(1) == 1);
    CHECK(chi4(2) == 0);
    CHECK(chi4(3) == -1);
    CHECK(chi4(4) == 0);
    CHECK(legendre3(1) == 1);
    CHECK(legendre3(2) == -1);
    CHECK(legendre3(3) == 0);
    for (long long n = -10000; n <= 10000; n += 37) {
        CHECK(chi4(n + 4) == chi4(n));
        CHECK(legendre3(n + 3) == legendre3(n));
    }
    // sign flip used by the partial-fraction kernels
    for (long long m = 1; m <= 40; ++m)
        for (long long k = 0; k <= 25; ++k) CHECK(legendre3(3 * m - k) == -legendre3(k));
}

TEST_CASE("sign function takes the value 1 at zero") {
    CHECK(sgn_s(0LL) == 1);
    CHECK(sgn_s(5LL) == 1);
    CHECK(sgn_s(-5LL) == -1);
    test_ctx();
    CHECK(sgn_s(Scalar(0)) == 1);
    CHECK(sgn_s(Scalar("-0.25")) == -1);
}

TEST_CASE("fibonacci is exact") {
    CHECK(fibonacci(0) == 0);
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(2) == 1);
    CHECK(fibonacci(10) == 55);
    CHECK(fibonacci(60) == BigInt("1548008755920"));
    CHECK(fibonacci(200) == BigInt("280571172992510140037611932413038677189525"));
    // recurrence spot check far out
    CHECK(fibonacci(90) == fibonacci(89) + fibonacci(88));
}

TEST_CASE("exact alternating and character partial sums") {
    for (long long n = 0; n <= 99; ++n)
        CHECK(alternating_sum_check(n) == (n % 2 == 0 ? 1 : -1));
    CHECK_THROWS_AS(alternating_sum_check(-1), std::domain_error);
    for (long long n = 1; n <= 99; n += 2) CHECK(legendre3_partial_sum(n) == 1);
    CHECK_THROWS_AS(legendre3_partial_sum(2), std::domain_error);
    CHECK_THROWS_AS(legendre3_partial_sum(0), std::domain_error);
}
