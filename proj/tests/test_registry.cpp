#include "doctest.h"

#include "atanforge/registry.hpp"
#include "test_util.hpp"

using namespace atanforge;

TEST_CASE("every catalogued identity is reachable by id") {
    for (const char* id :
         {"th1", "th1-chi4", "th2", "th3", "cor1", "cor2", "cor3", "complex-gen",
          "glaisher", "fibonacci", "bragg", "modular-chi4", "cais", "modular3",
          "theta-pair", "eq4", "lemma1", "lemma2", "lemma3", "lemma4", "lemma5",
          "lemma6", "lemma7", "lemma8", "lemma9", "lemma10", "symmetric-form",
          "sign-count", "dirichlet", "dirichlet-closed"}) {
        const auto* info = find_identity(id);
        REQUIRE_MESSAGE(info != nullptr, id);
        CHECK(info->id == id);
        CHECK(!info->paper_anchor.empty());
    }
    CHECK(find_identity("no-such-identity") == nullptr);
}

TEST_CASE("scalar argument grammar") {
    auto ctx = test_ctx();
    CHECK_NEAR(parse_scalar("pi"), const_pi(), tol(55));
    CHECK_NEAR(parse_scalar("2pi/3"), 2 * const_pi() / 3, tol(55));
    CHECK_NEAR(parse_scalar("pi/4"), const_pi() / 4, tol(55));
    CHECK_NEAR(parse_scalar("e"), const_e(), tol(55));
    CHECK_NEAR(parse_scalar("1/3"), Scalar(1) / 3, tol(55));
    CHECK_NEAR(parse_scalar("sqrt(2)"), sqrt(Scalar(2)), tol(55));
    CHECK_NEAR(parse_scalar("0.5"), Scalar("0.5"), tol(55));
    CHECK_NEAR(parse_scalar("-1.25e-3"), Scalar("-0.00125"), tol(55));
    CHECK_THROWS_AS(parse_scalar("banana"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
    CHECK(parse_int("42") == 42);
    CHECK(parse_int("-7") == -7);
    CHECK_THROWS_AS(parse_int("3.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int("x"), std::invalid_argument);
}

TEST_CASE("registry evaluation, missing and invalid parameters") {
    auto ctx = test_ctx();
    const auto* th1 = find_identity("th1");
    REQUIRE(th1 != nullptr);
    auto r = th1->eval({{"n", "3"}, {"m", "5"}, {"alpha", "1.25"}}, ctx);
    CHECK(r.status == Status::Pass);
    CHECK(r.paper_anchor == "Theorem 1");

    CHECK_THROWS_AS(th1->eval({{"n", "3"}}, ctx), std::invalid_argument);
    CHECK_THROWS_AS(th1->eval({{"n", "3"}, {"m", "5"}, {"alpha", "-1"}}, ctx),
                    std::invalid_argument);

    const auto* dc = find_identity("dirichlet-closed");
    REQUIRE(dc != nullptr);
    auto rc = dc->eval({{"n", "4"}, {"x", "2"}}, ctx);
    CHECK(rc.status == Status::Pass);
    CHECK_NEAR(rc.rhs, Scalar("-0.5"), tol(50));
}
