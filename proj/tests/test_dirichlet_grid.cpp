#include "doctest.h"

#include "atanforge/dirichlet_grid.hpp"
#include "test_util.hpp"

using namespace atanforge;

TEST_CASE("generalized exponents reduce to the base recipe at a = 1") {
    auto ctx = test_ctx();
    GridSpec spec{5, 7, Scalar(1)};
    auto gen = grid_exponents(spec);
    auto base = grid_exponents_base(spec);
    for (long j = 0; j <= spec.n; ++j) CHECK_NEAR(gen.alpha[j], base.alpha[j], tol(50));
    for (long k = 0; k <= spec.m; ++k) CHECK_NEAR(gen.beta[k], base.beta[k], tol(50));
    // cosh(alpha_j) = 2 - cos(pi j/n) at a = 1
    CHECK_NEAR(cosh(gen.alpha[2]), 2 - cos(const_pi() * 2 / spec.n), tol(50));
}

TEST_CASE("two-sum identity at interior points, base and anisotropic") {
    auto ctx = test_ctx();
    auto r = dirichlet_identity_residual({2, 2, Scalar(1)}, 1, 1, ctx);
    CHECK(r.status == Status::Pass);
    CHECK_NEAR(r.rhs, Scalar(-1), tol(50));

    auto r2 = dirichlet_identity_residual({5, 7, Scalar("1.6")}, 3, 4, ctx);
    CHECK(r2.status == Status::Pass);
    CHECK_NEAR(r2.rhs, Scalar(-12), tol(50));
}

TEST_CASE("the far corner is a genuine defect of the identity") {
    auto ctx = test_ctx();
    // At (x,y) = (n,m) every sine factor vanishes: lhs = 0, residual = nm.
    auto r = dirichlet_identity_residual({3, 3, Scalar(1)}, 3, 3, ctx);
    CHECK(r.status == Status::Fail);
    CHECK_NEAR(r.lhs, Scalar(0), tol(50));
    CHECK_NEAR(abs(r.residual), Scalar(9), tol(40));
}

TEST_CASE("single-sum closed form matches -x^2/(2n), not the printed -x^2/n") {
    auto ctx = test_ctx();
    auto a = closed_form_sum(2, 1, ctx);
    CHECK(a.matches_expected);
    CHECK(!a.matches_printed);
    CHECK_NEAR(a.sum, Scalar("-0.25"), tol(40));

    auto b = closed_form_sum(8, 5, ctx);
    CHECK(b.matches_expected);
    CHECK_NEAR(b.sum, Scalar(-25) / 16, tol(40));

    // x = n: every term vanishes, so even -x^2/(2n) fails there.
    auto c = closed_form_sum(3, 3, ctx);
    CHECK_NEAR(c.sum, Scalar(0), tol(50));
    CHECK(!c.matches_expected);
    CHECK(!c.matches_printed);
}

TEST_CASE("-xy is discrete-harmonic and the eigen split reproduces it") {
    auto ctx = test_ctx();
    GridSpec spec{4, 4, Scalar(1)};
    GridField prod(spec.n, spec.m);
    for (long x = 0; x <= spec.n; ++x)
        for (long y = 0; y <= spec.m; ++y) prod.at(x, y) = Scalar(-x * y);
    for (long x = 1; x < spec.n; ++x)
        for (long y = 1; y < spec.m; ++y)
            CHECK(abs(discrete_laplacian(prod, x, y, spec.lambda())) < tol(50));

    auto f1 = eigen_solution_f1(spec);
    auto f2 = eigen_solution_f2(spec);
    for (long x = 0; x <= spec.n; ++x)
        for (long y = 0; y <= spec.m; ++y)
            CHECK_NEAR(f1.at(x, y) + f2.at(x, y), Scalar(-x * y), tol(40));
}

TEST_CASE("dense solver agrees with the sine-series solution") {
    auto ctx = test_ctx();
    GridSpec spec{4, 5, Scalar(1)};
    auto f1 = eigen_solution_f1(spec);
    GridField bc(spec.n, spec.m);
    for (long x = 0; x <= spec.n; ++x)
        for (long y = 0; y <= spec.m; ++y)
            if (bc.is_boundary(x, y)) bc.at(x, y) = f1.at(x, y);
    auto solved = solve_dirichlet_direct(spec, bc);
    for (long x = 1; x < spec.n; ++x)
        for (long y = 1; y < spec.m; ++y)
            CHECK_NEAR(solved.at(x, y), f1.at(x, y), tol(30));
}

TEST_CASE("fitted sine coefficients match the cotangent weights") {
    auto ctx = test_ctx();
    GridSpec spec{5, 4, Scalar(1)};
    auto coeffs = f1_sine_coefficients(spec);
    auto exps = grid_exponents(spec);
    Scalar pi = const_pi();
    for (long j = 1; j < spec.n; ++j) {
        Scalar expected = spec.m * ((j % 2 == 0) ? 1 : -1) *
                          cos(pi * j / (2 * spec.n)) / sin(pi * j / (2 * spec.n)) /
                          sinh(spec.m * exps.alpha[j]);
        CHECK_NEAR(coeffs[j], expected, tol(35));
    }
}

TEST_CASE("grid parameter validation") {
    CHECK_THROWS_AS(GridSpec({1, 3, Scalar(1)}).validate(), std::domain_error);
    CHECK_THROWS_AS(GridSpec({3, 3, Scalar(0)}).validate(), std::domain_error);
}
