#include "doctest.h"

#include "atanforge/infinite_series.hpp"
#include "test_util.hpp"

using namespace atanforge;

TEST_CASE("arctan(2/(2n+1)^2) sums to pi/2") {
    auto ctx = test_ctx();
    auto tele = glaisher_sum(SumMode::Telescoped, ctx);
    CHECK(tele.converged);
    CHECK(tele.tail_bound == 0);
    CHECK_NEAR(tele.value, const_pi() / 2, tol(45));

    // The telescoping re-expression is exact term by term.
    for (long n : {1L, 2L, 10L, 1000L})
        CHECK(abs(glaisher_telescope_defect(n)) < tol(50));

    // Direct summation converges like 1/(2N): honest but slow.
    auto dctx = PrecisionContext::make(60, "", 1'000'000, "1e-6");
    dctx.apply();
    auto direct = glaisher_sum(SumMode::Direct, dctx);
    CHECK(direct.converged);
    CHECK(abs(direct.value - const_pi() / 2) < Scalar("1e-6"));
    CHECK(abs(direct.value - const_pi() / 2) <= direct.tail_bound);
    ctx.apply();
}

TEST_CASE("alternating even-index Fibonacci arctan series") {
    auto ctx = test_ctx();
    auto out = fibonacci_arctan_sum(ctx);
    CHECK(out.converged);
    Scalar expected = atan((sqrt(Scalar(5)) - 1) / 2);
    CHECK_NEAR(out.value, expected, tol(42));
    // frozen reference for the limit value
    CHECK_NEAR(expected, Scalar("0.55357435889704525150853273008926852"), tol(30));
}

TEST_CASE("arctan(sinh x/cosh nx) series telescopes to 3pi/4 - arctan e^x") {
    auto ctx = test_ctx();
    for (const char* xs : {"0.5", "1", "2"}) {
        Scalar x(xs);
        auto out = bragg_sum(x, ctx);
        CHECK(out.converged);
        Scalar rhs = 3 * const_pi() / 4 - atan(exp(x));
        CHECK_NEAR(out.value, rhs, tol(42));
    }
    // the excluded n=0 term accounts exactly for the e^{-x} variant
    Scalar x(1);
    Scalar with0 = bragg_sum(x, ctx).value + bragg_term(x, 0);
    CHECK_NEAR(with0, 3 * const_pi() / 4 - atan(exp(-x)), tol(42));
}

TEST_CASE("chi4-weighted exponential arctan pair") {
    auto ctx = test_ctx();
    auto r = modular_chi4_pair(Scalar("1.3"), ctx);
    CHECK(r.status == Status::Pass);
    CHECK_NEAR(r.rhs, const_pi() / 8, tol(50));
}

TEST_CASE("legendre3-weighted pair and its odd-index variant") {
    auto ctx = test_ctx();
    auto r = cais_pair(Scalar("1.1"), ctx);
    CHECK(r.status == Status::Pass);
    CHECK_NEAR(r.rhs, const_pi() / 18, tol(50));
    auto r3 = modular3_pair(Scalar("0.9"), ctx);
    CHECK(r3.status == Status::Pass);
    CHECK_NEAR(r3.rhs, 2 * const_pi() / 9, tol(50));
}

TEST_CASE("doubly infinite theta-transform pair") {
    auto ctx = test_ctx();
    auto r = theta_transform_pair(Scalar("1.2"), Scalar("0.6"), Scalar("1.0"), ctx);
    CHECK(r.status == Status::Pass);
    bool noted = false;
    for (const auto& n : r.notes)
        if (n.find("alpha*beta = 1") != std::string::npos) noted = true;
    CHECK(noted);
}

TEST_CASE("theta-transform terms at theta=phi=pi/4 reduce to chi4 terms") {
    auto ctx = test_ctx();
    Scalar g("0.8"), q = const_pi() / 4;
    for (long j : {-3L, -1L, 0L, 2L, 5L}) {
        // s(j) = +1 for j >= 0, -1 for j < 0; index n = 4|j| + s(j)
        long n = 4 * (j < 0 ? -j : j) + (j >= 0 ? 1 : -1);
        Scalar term = theta_transform_term(g, q, q, j);
        Scalar chi_term = atan(exp(-g * const_pi() / 2 * n));
        if (n % 4 == 3) chi_term = -chi_term;
        CHECK_NEAR(term, chi_term, tol(45));
    }
}
