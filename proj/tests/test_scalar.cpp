#include "doctest.h"

#include "atanforge/scalar.hpp"
#include "test_util.hpp"

using namespace atanforge;

TEST_CASE("precision context validation") {
    CHECK_NOTHROW(PrecisionContext::make(15));
    CHECK_THROWS_AS(PrecisionContext::make(14), std::invalid_argument);
    // tolerance cannot be tighter than the working precision supports
    CHECK_THROWS_AS(PrecisionContext::make(20, "1e-30"), std::invalid_argument);
    auto ctx = PrecisionContext::make(60);
    CHECK(ctx.digits == 60);
    CHECK_NEAR(ctx.verify_tolerance, tol(40), tol(60));
    CHECK_NEAR(ctx.tail_target, tol(42), tol(62));
    test_ctx();
}

TEST_CASE("hyperbolic solves against frozen oracles") {
    test_ctx();
    // ln(1+sqrt 2) and ln(2+sqrt 3), 50 digits
    CHECK_NEAR(asinh_solve(Scalar(1)),
               Scalar("0.88137358701954302523260932497979230902816032826164"), tol(49));
    CHECK_NEAR(acosh_solve(Scalar(2)),
               Scalar("1.3169578969248167086250463473079684440269819714675"), tol(48));
    CHECK(asinh_solve(Scalar(0)) == 0);
    CHECK_NEAR(asinh_solve(Scalar(-1)), -asinh_solve(Scalar(1)), tol(60));
    CHECK(acosh_solve(Scalar(1)) == 0);
    CHECK_THROWS_AS(acosh_solve(Scalar("0.999")), std::domain_error);
}

TEST_CASE("solves invert sinh and cosh") {
    test_ctx();
    for (int i = 1; i <= 40; ++i) {
        Scalar c = Scalar(i * i) / 100 - 3;
        CHECK_NEAR(mp::sinh(asinh_solve(c)), c, tol(55));
        Scalar d = 1 + Scalar(i) / 7;
        CHECK_NEAR(mp::cosh(acosh_solve(d)), d, tol(55));
    }
}

TEST_CASE("integer powers track signs and survive large exponents") {
    test_ctx();
    CHECK(pow_int(Scalar(2), 10) == 1024);
    CHECK(pow_int(Scalar(-2), 3) == -8);
    CHECK(pow_int(Scalar(-2), 4) == 16);
    CHECK(pow_int(Scalar(5), 0) == 1);
    CHECK_NEAR(pow_int(Scalar(2), -3), Scalar("0.125"), tol(58));
    CHECK_NEAR(pow_int(Scalar("1.5"), 200), pow(Scalar("1.5"), 200), tol(20));
    CHECK_NEAR(pow_int(Scalar("-1.01"), 101) * pow_int(Scalar("-1.01"), -101), Scalar(1),
               tol(55));
}

TEST_CASE("complex helpers") {
    test_ctx();
    Scalar pi = const_pi();
    ComplexScalar i{Scalar(0), Scalar(1)};
    ComplexScalar z{Scalar(1), Scalar(1)};
    CHECK_NEAR(arg(z), pi / 4, tol(58));
    ComplexScalar w = z * z;
    CHECK_NEAR(w.re, Scalar(0), tol(58));
    CHECK_NEAR(w.im, Scalar(2), tol(58));
    ComplexScalar q = w / z;
    CHECK_NEAR(q.re, z.re, tol(58));
    CHECK_NEAR(q.im, z.im, tol(58));
    // real argument reduces to the real arctangent
    CHECK_NEAR(arctan_re({Scalar("0.75"), Scalar(0)}), atan(Scalar("0.75")), tol(55));
    CHECK_THROWS_AS(arctan_re(i), std::domain_error);
    // sinh(iy) = i sin y
    ComplexScalar s = sinh(ComplexScalar{Scalar(0), Scalar("0.5")});
    CHECK_NEAR(s.re, Scalar(0), tol(58));
    CHECK_NEAR(s.im, sin(Scalar("0.5")), tol(55));
}

TEST_CASE("decimal rendering round-trips") {
    test_ctx();
    Scalar v = const_pi() / 7;
    Scalar back(to_decimal(v, 60));
    CHECK_NEAR(back, v, tol(62));
    CHECK(to_decimal(Scalar(0), 60).find('0') != std::string::npos);
}
