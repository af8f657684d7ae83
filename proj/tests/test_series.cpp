#include "doctest.h"

#include "atanforge/series.hpp"
#include "test_util.hpp"

using namespace atanforge;

TEST_CASE("geometric series sums to certified tail") {
    auto ctx = test_ctx();
    auto term = [](long n) { return pow_int(Scalar(2), -n); };
    auto tail = [](long n) { return pow_int(Scalar(2), -n); };  // remainder after n
    auto s = sum_with_tail(term, tail, ctx, 0);
    CHECK(s.converged);
    CHECK(s.tail_bound <= ctx.tail_target);
    CHECK_NEAR(s.value, Scalar(2), 2 * ctx.tail_target);
    CHECK(s.terms_used >= 140);  // 2^-140 ~ 7e-43
}

TEST_CASE("start index is honoured") {
    auto ctx = test_ctx();
    auto term = [](long n) { return pow_int(Scalar(2), -n); };
    auto tail = [](long n) { return pow_int(Scalar(2), -n); };
    auto s = sum_with_tail(term, tail, ctx, 3);
    CHECK_NEAR(s.value, Scalar("0.25"), 2 * ctx.tail_target);
}

TEST_CASE("hitting the term cap reports unconverged") {
    auto ctx = test_ctx();
    ctx.max_terms = 50;
    auto term = [](long) { return Scalar(1) / 1000; };
    auto tail = [](long) { return Scalar(1); };
    auto s = sum_with_tail(term, tail, ctx, 0);
    CHECK_FALSE(s.converged);
    CHECK(s.terms_used == 50);
    CHECK_NEAR(s.value, Scalar("0.05"), tol(55));
}

TEST_CASE("summation is deterministic") {
    auto ctx = test_ctx();
    auto term = [](long n) { return 1 / (Scalar(n) * n + 1); };
    auto tail = [](long n) { return Scalar(1) / n; };
    ctx.max_terms = 2000;
    auto a = sum_with_tail(term, tail, ctx, 1);
    auto b = sum_with_tail(term, tail, ctx, 1);
    CHECK(a.value == b.value);
    CHECK(a.terms_used == b.terms_used);
}
