#include "doctest.h"

#include "atanforge/lemma_kernels.hpp"
#include "test_util.hpp"

using namespace atanforge;

TEST_CASE("arctan doubling and sinh-argument route agree") {
    auto ctx = test_ctx();
    auto [l, r] = lemma1_pair(4, 3, 2, Scalar("1.3"));
    CHECK_NEAR(l, r, tol(45));
    auto [l0, r0] = lemma1_pair(0, 0, 0, Scalar("0.7"));
    CHECK_NEAR(l0, r0, tol(45));
}

TEST_CASE("sinh-argument form matches the cosine resummation") {
    auto ctx = test_ctx();
    auto [l, r] = lemma2_pair(3, 4, 1, Scalar("2.1"));
    CHECK_NEAR(l, r, tol(45));
}

TEST_CASE("sinh sum factorizes over roots of unity") {
    auto ctx = test_ctx();
    ComplexScalar a{Scalar("0.4"), Scalar("0.2")};
    ComplexScalar b{Scalar("-0.3"), Scalar("0.5")};
    auto [l, r] = sinh_factorization_pair(a, b, 3);
    CHECK_NEAR(l.re, r.re, tol(45));
    CHECK_NEAR(l.im, r.im, tol(45));
}

TEST_CASE("alternating cosine resummation") {
    auto ctx = test_ctx();
    auto [l, r] = lemma3_pair(5, 2, 3, Scalar("0.9"));
    CHECK_NEAR(l, r, tol(45));
}

TEST_CASE("partial fractions of the cosh reciprocal kernel") {
    auto ctx = test_ctx();
    auto [l, r] = lemma5_pair(Scalar("0.8"), 4);
    CHECK_NEAR(l, r, tol(45));
    auto [l2, r2] = lemma5_pair(Scalar("-1.7"), 2);
    CHECK_NEAR(l2, r2, tol(45));
}

TEST_CASE("cosh-kernel sum transformation vanishes") {
    auto ctx = test_ctx();
    CHECK(abs(lemma6_residual(Scalar("1.4"), 3, 5)) < tol(45));
    CHECK(abs(lemma6_residual(Scalar("0.6"), 0, 2)) < tol(45));
}

TEST_CASE("sinh(mt)/sinh(3mt) kernel expansion and its poles") {
    auto ctx = test_ctx();
    auto [l, r] = lemma7_pair(Scalar("0.45"), 5);
    CHECK_NEAR(l, r, tol(45));
    auto [l2, r2] = lemma7_pair(Scalar(3), 7);
    CHECK_NEAR(l2, r2, tol(45));
    CHECK_THROWS_AS(lemma7_pair(Scalar(1), 3), std::domain_error);
    CHECK_THROWS_AS(lemma7_pair(Scalar(-1), 3), std::domain_error);
}

TEST_CASE("two-sum kernel transformation vanishes") {
    auto ctx = test_ctx();
    CHECK(abs(lemma8_residual(Scalar("1.9"), 3, 5, ctx)) < tol(45));
    CHECK(abs(lemma8_residual(Scalar("0.37"), 1, 3, ctx)) < tol(45));
}

TEST_CASE("integral of sinh t/sinh 3t matches both closed forms") {
    auto ctx = test_ctx();
    auto t = lemma9_triple(Scalar("0.75"), tol(25));
    CHECK(t.quadrature_converged);
    CHECK_NEAR(t.closed_form_atan, t.closed_form_exp, tol(45));
    CHECK_NEAR(t.integral, t.closed_form_atan, tol(24));
}

TEST_CASE("symmetric double-sum form of the two-angle half sum") {
    auto ctx = test_ctx();
    Scalar res = th3_symmetric_form_residual(5, 3, Scalar("1.2"), Scalar("0.4"),
                                             Scalar("0.9"));
    CHECK(abs(res) < tol(45));
}

TEST_CASE("tangent sign count equals one") {
    auto ctx = test_ctx();
    CHECK(sign_count_check(1, Scalar("0.3")) == 1);
    CHECK(sign_count_check(7, Scalar("0.3")) == 1);
    CHECK(sign_count_check(13, Scalar("1.2")) == 1);
}
