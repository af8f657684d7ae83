#include "doctest.h"

#include "atanforge/quadrature.hpp"
#include "test_util.hpp"

using namespace atanforge;

TEST_CASE("polynomial and trigonometric integrals") {
    test_ctx();
    auto q1 = integrate_tanh_sinh([](const Scalar& x) { return x * x; }, Scalar(0),
                                  Scalar(1), tol(30));
    CHECK(q1.converged);
    CHECK_NEAR(q1.value, Scalar(1) / 3, tol(28));

    Scalar pi = const_pi();
    auto q2 = integrate_tanh_sinh([](const Scalar& x) { return sin(x); }, Scalar(0), pi,
                                  tol(30));
    CHECK(q2.converged);
    CHECK_NEAR(q2.value, Scalar(2), tol(28));
}

TEST_CASE("endpoint singularity is handled") {
    test_ctx();
    // int_0^1 dx/sqrt(x) = 2; integrable singularity at 0
    auto q = integrate_tanh_sinh([](const Scalar& x) { return 1 / sqrt(x); }, Scalar(0),
                                 Scalar(1), tol(25));
    CHECK(q.converged);
    CHECK_NEAR(q.value, Scalar(2), tol(23));
}

TEST_CASE("complete elliptic integral oracle value") {
    test_ctx();
    Scalar k("0.5");
    auto q = integrate_tanh_sinh(
        [&k](const Scalar& t) {
            Scalar s = sin(t);
            return 1 / sqrt(1 - k * k * s * s);
        },
        Scalar(0), const_pi() / 2, tol(21));
    CHECK(q.converged);
    // K(0.5), 50 digits
    CHECK_NEAR(q.value, Scalar("1.6857503548125960428712036577990769895008008941411"),
               tol(20));
}
