#include "doctest.h"

#include "atanforge/elliptic.hpp"
#include "test_util.hpp"

using namespace atanforge;

TEST_CASE("agm basics") {
    test_ctx();
    CHECK(agm(Scalar(1), Scalar(1)) == 1);
    CHECK_NEAR(agm(Scalar(2), Scalar(8)), agm(Scalar(8), Scalar(2)), tol(55));
    CHECK_THROWS_AS(agm(Scalar(0), Scalar(1)), std::domain_error);
    CHECK_THROWS_AS(agm(Scalar(1), Scalar(-2)), std::domain_error);
}

TEST_CASE("bundle internal consistency") {
    auto ctx = test_ctx();
    auto b = elliptic_bundle(Scalar("0.3"), ctx);
    CHECK_NEAR(b.k * b.k + b.k_prime * b.k_prime, Scalar(1), tol(55));
    CHECK_NEAR(b.q, exp(-const_pi() * b.K_prime / b.K), tol(55));
    // swapping k and k' swaps the integrals
    auto bc = elliptic_bundle(b.k_prime, ctx);
    CHECK_NEAR(bc.K, b.K_prime, tol(50));
    CHECK_THROWS_AS(elliptic_bundle(Scalar(0), ctx), std::domain_error);
    CHECK_THROWS_AS(elliptic_bundle(Scalar(1), ctx), std::domain_error);
}

TEST_CASE("self-dual nome and frozen K") {
    auto ctx = test_ctx();
    auto b = elliptic_bundle(1 / sqrt(Scalar(2)), ctx);
    CHECK_NEAR(b.q, exp(-const_pi()), tol(45));
    auto bh = elliptic_bundle(Scalar("0.5"), ctx);
    // K(0.5), 50 digits
    CHECK_NEAR(bh.K, Scalar("1.6857503548125960428712036577990769895008008941411"),
               tol(48));
}

TEST_CASE("alternating nome series hits the modular angle") {
    auto ctx = test_ctx();
    for (const char* ks : {"0.3", "0.72"}) {
        auto b = elliptic_bundle(Scalar(ks), ctx);
        auto s = modular_angle_series(b, ctx);
        CHECK(s.converged);
        CHECK_NEAR(s.value, asin(Scalar(ks)) / 4, tol(40));
        CHECK(s.tail_bound <= ctx.tail_target);
    }
}
