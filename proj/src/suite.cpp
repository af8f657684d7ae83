#include "atanforge/suite.hpp"

#include <cmath>
#include <functional>
#include <memory>
#include <ostream>
#include <random>

#include "atanforge/dirichlet_grid.hpp"
#include "atanforge/elliptic.hpp"
#include "atanforge/finite_identities.hpp"
#include "atanforge/infinite_series.hpp"
#include "atanforge/lemma_kernels.hpp"
#include "atanforge/number_theory.hpp"
#include "atanforge/quadrature.hpp"
#include "atanforge/report.hpp"

namespace atanforge {

namespace {

/// Residual thresholds per tolerance tier, derived from the reporting
/// precision: strict 10^-(d-15), main 10^-(d-20), relaxed 10^-(d-30),
/// solver 10^-(d-35), floored at 1e-15. The quadrature and truncation caps
/// are fixed regardless of digits. The 100-digit scaling rerun uses a
/// uniform 1e-80 floor for everything that is not capped.
struct Tiers {
    Scalar strict, main, relaxed, solver;
    Scalar quad_k, quad_l9, direct_cap;
    bool scaling_rerun = false;
};

Tiers tiers_for(int digits, bool scaling_rerun) {
    auto tier = [digits](int drop) {
        int e = digits - drop;
        if (e < 15) e = 15;
        return pow(Scalar(10), -e);
    };
    Tiers t;
    if (scaling_rerun) {
        t.strict = t.main = t.relaxed = t.solver = pow(Scalar(10), -80);
        t.scaling_rerun = true;
    } else {
        t.strict = tier(15);
        t.main = tier(20);
        t.relaxed = tier(30);
        t.solver = tier(35);
    }
    t.quad_k = pow(Scalar(10), -20);
    t.quad_l9 = pow(Scalar(10), -24);
    t.direct_cap = Scalar("6e-7");
    return t;
}

// label -> (recorded value, tolerance in force); used by the precision
// scaling criterion to bound how far any value moves between 60 and 100
// digits
using ValueLog = std::map<std::string, std::pair<Scalar, Scalar>>;

class Checker {
  public:
    Checker(CriterionResult& res, ValueLog* log) : res_(res), log_(log) {}

    void residual(const std::string& label, const Scalar& value, const Scalar& target,
                  const Scalar& tol) {
        Scalar r = abs(value - target);
        if (log_) log_->emplace(label, std::make_pair(value, tol));
        ++res_.checks;
        if (r > res_.max_residual) res_.max_residual = r;
        if (!(r <= tol))
            fail(label + ": |residual| = " + to_decimal(r, 5) + " exceeds " +
                 to_decimal(tol, 3));
    }

    void exact(const std::string& label, bool ok, const std::string& detail) {
        ++res_.checks;
        if (!ok) fail(label + ": " + detail);
    }

    long failures() const { return res_.failures; }

  private:
    void fail(const std::string& note) {
        res_.pass = false;
        ++res_.failures;
        if (res_.failure_notes.size() < 12)
            res_.failure_notes.push_back(note);
        else if (res_.failure_notes.size() == 12)
            res_.failure_notes.push_back("(further failure details suppressed)");
    }

    CriterionResult& res_;
    ValueLog* log_;
};

Scalar cot(const Scalar& x) { return cos(x) / sin(x); }

// ---------------------------------------------------------------- criterion 1

void crit1(Checker& ck, const PrecisionContext& ctx, const Tiers& t) {
    Scalar pi = const_pi();
    std::vector<Scalar> alphas = {Scalar("0.1"), Scalar(1) / 3, Scalar(1), const_e(),
                                  Scalar(10)};
    for (long n = 0; n <= 20; ++n)
        for (long m = 0; m <= 20; ++m)
            for (size_t ai = 0; ai < alphas.size(); ++ai) {
                ReciprocalParams p{n, m, alphas[ai]};
                std::string tag = "(" + std::to_string(n) + "," + std::to_string(m) +
                                  ",a" + std::to_string(ai) + ")";
                auto r1 = th1_residual(p, ctx);
                ck.residual("1.th1" + tag, r1.lhs, r1.rhs, t.main);
                auto r2 = th1_chi4_form_residual(p, ctx);
                ck.residual("1.th1-chi4" + tag, r2.lhs, r2.rhs, t.main);
            }
    for (long n = 0; n <= 50; ++n)
        ck.residual("1.cor1(" + std::to_string(n) + ")", th1_half_sum(n, n, Scalar(1)),
                    pi / 8, t.main);
}

// ---------------------------------------------------------------- criterion 2

void crit2(Checker& ck, const PrecisionContext& ctx, const Tiers& t) {
    Scalar pi = const_pi();
    Scalar s3 = sqrt(Scalar(3));
    std::vector<Scalar> alphas = {Scalar("0.2"), Scalar(1), Scalar("1.7"), Scalar(5)};
    for (long n = 1; n <= 15; n += 2)
        for (long m = 1; m <= 15; m += 2)
            for (size_t ai = 0; ai < alphas.size(); ++ai) {
                auto r = th2_residual({n, m, alphas[ai]}, ctx);
                std::string tag = "(" + std::to_string(n) + "," + std::to_string(m) +
                                  ",a" + std::to_string(ai) + ")";
                ck.residual("2.th2" + tag, r.lhs, r.rhs, t.relaxed);
            }
    for (long n = 1; n <= 21; n += 2)
        ck.residual("2.cor2(" + std::to_string(n) + ")", th2_half_sum(n, n, Scalar(1)),
                    -pi / 12, t.main);

    // the n=3 closed-form display, matched term by term against the
    // j = 1, 2, 4 summands of the half sum (cot(pi/4 - pi j/9) = r_j)
    Scalar d1 = atan(s3 / (1 + 2 * pow_int(cot(pi / 36), 3)));
    Scalar d2 = atan(s3 / (1 + 2 * pow_int(cot(5 * pi / 36), 3)));
    Scalar d3 = atan(s3 / (1 + 2 * pow_int(cot(29 * pi / 36), 3)));
    auto term = [&](long j) {
        Scalar tn = tan(pi * j / 9);
        Scalar r = (1 + tn) / (1 - tn);
        return legendre3(j) * atan(s3 / (1 + 2 * pow_int(r, 3)));
    };
    ck.residual("2.cor2-display.j1", term(1), d2, t.main);
    ck.residual("2.cor2-display.j2", term(2), -d1, t.main);
    ck.residual("2.cor2-display.j4", term(4), d3, t.main);
    ck.residual("2.cor2-display.sum", d1 - d2 - d3, pi / 12, t.main);
}

// ---------------------------------------------------------------- criterion 3

void crit3(Checker& ck, const PrecisionContext& ctx, const Tiers& t) {
    Scalar pi = const_pi();
    std::vector<Scalar> alphas = {Scalar("0.5"), Scalar(1), Scalar(2)};
    std::vector<Scalar> angles = {Scalar("0.3"), Scalar("0.7"), Scalar("1.2")};
    for (long n = 1; n <= 9; n += 2)
        for (long m = 1; m <= 9; m += 2)
            for (size_t ai = 0; ai < alphas.size(); ++ai)
                for (size_t ti = 0; ti < angles.size(); ++ti)
                    for (size_t pi_ = 0; pi_ < angles.size(); ++pi_) {
                        std::string tag = "(" + std::to_string(n) + "," +
                                          std::to_string(m) + ",a" + std::to_string(ai) +
                                          ",t" + std::to_string(ti) + ",p" +
                                          std::to_string(pi_) + ")";
                        auto r = th3_residual({n, m, alphas[ai]},
                                              {angles[ti], angles[pi_]}, ctx);
                        ck.residual("3.th3" + tag, r.lhs, r.rhs, t.relaxed);
                        Scalar sym = th3_symmetric_form_residual(
                            n, m, alphas[ai], angles[ti], angles[pi_]);
                        ck.residual("3.sym" + tag, sym, Scalar(0), t.main);
                    }
    for (long n = 1; n <= 9; n += 2)
        for (size_t pi_ = 0; pi_ < angles.size(); ++pi_)
            ck.exact("3.sign-count(" + std::to_string(n) + ",p" + std::to_string(pi_) + ")",
                     sign_count_check(n, angles[pi_]) == 1, "tally != 1");

    for (size_t ti = 0; ti < angles.size(); ++ti) {
        const Scalar& th = angles[ti];
        auto r = cor3_sum(3, th, ctx);
        ck.residual("3.cor3(t" + std::to_string(ti) + ")", r.lhs, r.rhs, t.main);
        // the n=3 display written with cot^3 denominators
        Scalar s2 = sin(2 * th), c2 = cos(2 * th);
        Scalar disp = atan(s2 / (c2 + pow_int(cot(pi / 12 + th / 3), 3))) -
                      atan(s2 / (c2 + pow_int(cot(pi / 12 - th / 3), 3))) +
                      atan(s2 / (c2 + pow_int(cot(th / 3 - pi / 4), 3)));
        ck.residual("3.cor3-display(t" + std::to_string(ti) + ")", disp, th - pi / 4,
                    t.main);
    }
}

// ---------------------------------------------------------------- criterion 4

void crit4(Checker& ck, const PrecisionContext& ctx, const Tiers& t) {
    Scalar pi = const_pi();
    Scalar isqrt2 = 1 / sqrt(Scalar(2));
    auto self_dual = elliptic_bundle(isqrt2, ctx);
    ck.residual("4.nome-self-dual", self_dual.q, exp(-pi), t.strict);

    std::vector<Scalar> ks = {Scalar("0.1"), Scalar("0.5"), isqrt2, Scalar("0.9"),
                              Scalar("0.99")};
    for (size_t ki = 0; ki < ks.size(); ++ki) {
        auto b = elliptic_bundle(ks[ki], ctx);
        auto s = modular_angle_series(b, ctx);
        ck.exact("4.series-converged(k" + std::to_string(ki) + ")", s.converged,
                 "series hit max_terms");
        ck.residual("4.modular-angle(k" + std::to_string(ki) + ")", s.value,
                    asin(ks[ki]) / 4, t.main);
    }

    Scalar kk("0.5");
    auto integrand = [&kk](const Scalar& th) {
        Scalar s = sin(th);
        return 1 / sqrt(1 - kk * kk * s * s);
    };
    auto q = integrate_tanh_sinh(integrand, Scalar(0), pi / 2, pow(Scalar(10), -21));
    ck.exact("4.K-quadrature-converged", q.converged, "quadrature did not converge");
    ck.residual("4.K-vs-quadrature", q.value, elliptic_bundle(kk, ctx).K, t.quad_k);
}

// ---------------------------------------------------------------- criterion 5

void crit5(Checker& ck, const PrecisionContext& ctx, const Tiers& t) {
    Scalar pi = const_pi();

    auto tele = glaisher_sum(SumMode::Telescoped, ctx);
    ck.residual("5.glaisher-telescoped", tele.value, pi / 2, t.strict);
    PrecisionContext dctx = ctx;
    dctx.max_terms = 1'000'000;
    dctx.tail_target = pow(Scalar(10), -60);
    auto dir = glaisher_sum(SumMode::Direct, dctx);
    ck.exact("5.glaisher-direct-terms", dir.terms_used == 1'000'000,
             "expected 10^6 terms, used " + std::to_string(dir.terms_used));
    ck.residual("5.glaisher-direct", dir.value, pi / 2, t.direct_cap);
    ck.exact("5.glaisher-modes-agree", abs(tele.value - dir.value) <= dir.tail_bound,
             "modes differ by more than the direct tail bound");

    PrecisionContext fctx = ctx;
    {
        int e = ctx.digits - 29;
        if (e < 31) e = 31;
        if (t.scaling_rerun) e = 81;
        fctx.tail_target = pow(Scalar(10), -e);
    }
    auto fib = fibonacci_arctan_sum(fctx);
    ck.residual("5.fibonacci", fib.value, atan((sqrt(Scalar(5)) - 1) / 2), t.relaxed);
    if (!t.scaling_rerun)
        ck.exact("5.fibonacci-terms", fib.terms_used <= 80,
                 "needed " + std::to_string(fib.terms_used) + " terms (> 80)");

    std::vector<Scalar> xs = {Scalar("0.5"), Scalar(1), Scalar(2)};
    for (size_t xi = 0; xi < xs.size(); ++xi) {
        auto s = bragg_sum(xs[xi], ctx);
        ck.residual("5.bragg(x" + std::to_string(xi) + ")", s.value,
                    3 * pi / 4 - atan(exp(xs[xi])), t.main);
    }

    std::vector<Scalar> a5 = {Scalar("0.5"), Scalar(1), pi / 2, Scalar(3)};
    for (size_t ai = 0; ai < a5.size(); ++ai) {
        auto r = modular_chi4_pair(a5[ai], ctx);
        ck.residual("5.chi4-pair(a" + std::to_string(ai) + ")", r.lhs, r.rhs, t.main);
    }
    std::vector<Scalar> a6 = {Scalar(1), 2 * pi / 3, Scalar(2)};
    for (size_t ai = 0; ai < a6.size(); ++ai) {
        auto r = cais_pair(a6[ai], ctx);
        ck.residual("5.cais-pair(a" + std::to_string(ai) + ")", r.lhs, r.rhs, t.main);
    }
    std::vector<Scalar> a3 = {Scalar("0.8"), pi / 3};
    for (size_t ai = 0; ai < a3.size(); ++ai) {
        auto r = modular3_pair(a3[ai], ctx);
        ck.residual("5.modular3-pair(a" + std::to_string(ai) + ")", r.lhs, r.rhs, t.main);
    }

    std::vector<Scalar> angles = {Scalar("0.3"), Scalar("0.7"), Scalar("1.2")};
    std::vector<Scalar> at = {Scalar("0.7"), Scalar("1.3")};
    for (size_t ti = 0; ti < angles.size(); ++ti)
        for (size_t pi_ = 0; pi_ < angles.size(); ++pi_)
            for (size_t ai = 0; ai < at.size(); ++ai) {
                auto r = theta_transform_pair(at[ai], angles[ti], angles[pi_], ctx);
                ck.residual("5.theta-pair(t" + std::to_string(ti) + ",p" +
                                std::to_string(pi_) + ",a" + std::to_string(ai) + ")",
                            r.lhs, r.rhs, t.main);
            }

    // term bijection between the theta-transform at theta = phi = pi/4 and
    // the chi4 series: index map n = 4|j| + s(j), scale map gamma -> gamma pi/2
    std::vector<Scalar> gs = {Scalar("0.4"), Scalar(1)};
    for (size_t gi = 0; gi < gs.size(); ++gi)
        for (long j = -25; j <= 25; ++j) {
            long nn = 4 * std::labs(j) + (j >= 0 ? 1 : -1);
            Scalar lhsj = theta_transform_term(gs[gi], pi / 4, pi / 4, j);
            Scalar rhsj = chi4(nn) * atan(exp(-gs[gi] * pi / 2 * nn));
            ck.residual("5.bijection(g" + std::to_string(gi) + "," + std::to_string(j) +
                            ")",
                        lhsj, rhsj, t.main);
        }
}

// ---------------------------------------------------------------- criterion 6

void crit6(Checker& ck, const PrecisionContext& ctx, const Tiers& t,
           unsigned long long seed) {
    Scalar pi = const_pi();
    std::mt19937_64 rng(seed);
    // all draw values pass through double so the sequence is identical at
    // every working precision
    auto urnd = [&rng](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    };
    auto irnd = [&rng](long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng);
    };

    for (int i = 0; i < 100; ++i) {
        long n = irnd(0, 20), m = irnd(0, 20), j = irnd(-25, 25);
        Scalar a(std::pow(10.0, urnd(-1.0, 0.8)));
        auto pr = lemma1_pair(n, m, j, a);
        ck.residual("6.lemma1." + std::to_string(i), pr.first, pr.second, t.strict);
    }
    for (int i = 0; i < 100; ++i) {
        // the cotangent split behind this pair needs cos(pi j/(2n+1)) > 0,
        // i.e. |j| <= n -- the only range the proof ever substitutes
        long n = irnd(0, 20), m = irnd(0, 15), j = irnd(-n, n);
        Scalar a(std::pow(10.0, urnd(-1.0, 0.8)));
        auto pr = lemma2_pair(n, m, j, a);
        ck.residual("6.lemma2." + std::to_string(i), pr.first, pr.second, t.strict);
    }
    for (int i = 0; i < 100; ++i) {
        long n = irnd(0, 20), m = irnd(0, 15), j = irnd(-25, 25);
        Scalar a(std::pow(10.0, urnd(-1.0, 0.8)));
        auto pr = lemma3_pair(n, m, j, a);
        ck.residual("6.lemma3." + std::to_string(i), pr.first, pr.second, t.strict);
    }
    // the sinh product factorization backing lemma 3's proof, at complex points
    for (int i = 0; i < 20; ++i) {
        ComplexScalar a{Scalar(urnd(-1.5, 1.5)), Scalar(urnd(-1.5, 1.5))};
        ComplexScalar b{Scalar(urnd(-1.5, 1.5)), Scalar(urnd(-1.5, 1.5))};
        long m = irnd(0, 6);
        auto pr = sinh_factorization_pair(a, b, m);
        ck.residual("6.sinh-fact." + std::to_string(i) + ".re", pr.first.re, pr.second.re,
                    t.strict);
        ck.residual("6.sinh-fact." + std::to_string(i) + ".im", pr.first.im, pr.second.im,
                    t.strict);
    }
    for (long n = 0; n <= 99; ++n)
        ck.exact("6.lemma4." + std::to_string(n),
                 alternating_sum_check(n) == (n % 2 == 0 ? 1 : -1), "sum != (-1)^n");
    for (int i = 0; i < 100; ++i) {
        Scalar z(urnd(-3.0, 3.0));
        long m = irnd(0, 15);
        auto pr = lemma5_pair(z, m);
        ck.residual("6.lemma5." + std::to_string(i), pr.first, pr.second, t.strict);
    }
    for (int i = 0; i < 100; ++i) {
        Scalar z(std::pow(10.0, urnd(-0.6, 0.6)));
        long n = irnd(0, 12), m = irnd(0, 12);
        ck.residual("6.lemma6." + std::to_string(i), lemma6_residual(z, n, m), Scalar(0),
                    t.strict);
    }
    for (int i = 0; i < 100; ++i) {
        long m = 2 * irnd(0, 6) + 1;
        double zd;
        do {
            zd = urnd(-3.0, 3.0);
        } while (std::fabs(zd - 1) < 0.05 || std::fabs(zd + 1) < 0.05);
        auto pr = lemma7_pair(Scalar(zd), m);
        ck.residual("6.lemma7." + std::to_string(i), pr.first, pr.second, t.strict);
    }
    // pole avoidance decided entirely in double arithmetic so the rejection
    // sampling consumes the same rng stream at every precision
    auto l8_clear = [](double zd, long n, long m) {
        for (long j = 1; j <= 3 * n / 2; ++j) {
            if (!legendre3(j)) continue;
            double td = std::tan(M_PI * j / (3 * n));
            if (std::fabs(std::fabs(zd * td) - 1) < 0.02) return false;
        }
        for (long k = 1; k <= 3 * m / 2; ++k) {
            if (!legendre3(k)) continue;
            double ud = std::tan(M_PI * k / (3 * m));
            if (std::fabs(std::fabs(ud / zd) - 1) < 0.02) return false;
        }
        return true;
    };
    for (int i = 0; i < 100; ++i) {
        long n, m;
        double zd;
        do {
            n = 2 * irnd(0, 4) + 1;
            m = 2 * irnd(0, 4) + 1;
            zd = std::pow(10.0, urnd(-0.5, 0.5));
        } while (!l8_clear(zd, n, m));
        ck.residual("6.lemma8." + std::to_string(i), lemma8_residual(Scalar(zd), n, m, ctx),
                    Scalar(0), t.strict);
    }
    for (int i = 0; i < 100; ++i) {
        Scalar s(urnd(0.01, 3.0));
        auto tr = lemma9_triple(s, pow(Scalar(10), -25));
        ck.residual("6.lemma9." + std::to_string(i) + ".closed", tr.closed_form_atan,
                    tr.closed_form_exp, t.strict);
        ck.exact("6.lemma9." + std::to_string(i) + ".quad-converged",
                 tr.quadrature_converged, "quadrature did not converge");
        ck.residual("6.lemma9." + std::to_string(i) + ".quad", tr.integral,
                    tr.closed_form_exp, t.quad_l9);
    }
    for (long n = 1; n <= 99; n += 2)
        ck.exact("6.lemma10." + std::to_string(n), legendre3_partial_sum(n) == 1,
                 "sum != 1");
    (void)pi;
}

// ---------------------------------------------------------------- criterion 7

void crit7(Checker& ck, const PrecisionContext& ctx, const Tiers& t,
           CriterionResult& res) {
    Scalar pi = const_pi();
    std::vector<Scalar> avals = {Scalar(1), Scalar("0.5"), Scalar("1.6")};

    long corner_failures = 0, other_failures = 0;
    for (long n = 2; n <= 12; ++n)
        for (long m = 2; m <= 12; ++m)
            for (size_t ai = 0; ai < avals.size(); ++ai) {
                GridSpec spec;
                spec.n = n;
                spec.m = m;
                spec.aniso_alpha = avals[ai];
                for (long x = 1; x <= n; ++x)
                    for (long y = 1; y <= m; ++y) {
                        auto r = dirichlet_identity_residual(spec, x, y, ctx);
                        bool ok = abs(r.lhs - r.rhs) <= t.relaxed;
                        if (!ok) (x == n && y == m ? corner_failures : other_failures)++;
                        ck.residual("7.identity(" + std::to_string(n) + "," +
                                        std::to_string(m) + ",a" + std::to_string(ai) +
                                        "," + std::to_string(x) + "," +
                                        std::to_string(y) + ")",
                                    r.lhs, r.rhs, t.relaxed);
                    }
            }
    if (corner_failures)
        res.failure_notes.push_back(
            "identity failures are confined to the far corner (x,y)=(n,m): " +
            std::to_string(corner_failures) +
            " points, residual exactly n*m there because every sine factor vanishes; "
            "the stated domain 1<=x<=n, 1<=y<=m includes that corner, so the checks are "
            "kept and fail honestly (" +
            std::to_string(other_failures) + " failures elsewhere)");

    long closed_edge_failures = 0;
    for (long n = 2; n <= 12; ++n)
        for (long x = 1; x <= n; ++x) {
            auto r = closed_form_sum(n, x, ctx);
            if (x == n && !(abs(r.sum - r.expected) <= t.main)) ++closed_edge_failures;
            ck.residual("7.closed(" + std::to_string(n) + "," + std::to_string(x) + ")",
                        r.sum, r.expected, t.main);
            ck.exact("7.closed-printed(" + std::to_string(n) + "," + std::to_string(x) + ")",
                     !r.matches_printed || x == n,
                     "sum unexpectedly matches the printed -x^2/n");
        }
    if (closed_edge_failures)
        res.failure_notes.push_back(
            "closed-form failures are confined to x = n (" +
            std::to_string(closed_edge_failures) +
            " points): every sine factor vanishes there so the sum is exactly 0, not "
            "-x^2/(2n)");

    // base recipe (cosh alpha_j = 2 - cos(pi j/n)) coincides with the
    // generalized one at a = 1
    for (long n : {2L, 5L, 12L}) {
        GridSpec spec;
        spec.n = n;
        spec.m = n;
        auto ga = grid_exponents(spec);
        auto gb = grid_exponents_base(spec);
        Scalar dev = 0;
        for (long j = 0; j <= n; ++j) {
            Scalar d = abs(ga.alpha[j] - gb.alpha[j]);
            if (d > dev) dev = d;
        }
        ck.residual("7.exponents-base(" + std::to_string(n) + ")", dev, Scalar(0),
                    t.strict);
    }

    auto combo = [&](long n, long m, const Scalar& a, const std::string& tag) {
        GridSpec spec;
        spec.n = n;
        spec.m = m;
        spec.aniso_alpha = a;
        Scalar lam = spec.lambda();
        auto f1 = eigen_solution_f1(spec);
        auto f2 = eigen_solution_f2(spec);

        Scalar dev = 0;
        for (long x = 0; x <= n; ++x)
            for (long y = 0; y <= m; ++y) {
                Scalar d = abs(f1.at(x, y) + f2.at(x, y) + Scalar(x) * y);
                if (d > dev) dev = d;
            }
        ck.residual("7.f1f2" + tag, dev, Scalar(0), t.solver);

        auto boundary_of = [&](const GridField& f) {
            GridField b(n, m);
            for (long x = 0; x <= n; ++x)
                for (long y = 0; y <= m; ++y)
                    if (b.is_boundary(x, y)) b.at(x, y) = f.at(x, y);
            return b;
        };
        auto sol1 = solve_dirichlet_direct(spec, boundary_of(f1));
        dev = 0;
        for (long x = 1; x < n; ++x)
            for (long y = 1; y < m; ++y) {
                Scalar d = abs(sol1.at(x, y) - f1.at(x, y));
                if (d > dev) dev = d;
            }
        ck.residual("7.solve-f1" + tag, dev, Scalar(0), t.solver);

        GridField xyf(n, m);
        for (long x = 0; x <= n; ++x)
            for (long y = 0; y <= m; ++y) xyf.at(x, y) = Scalar(-x) * y;
        auto solxy = solve_dirichlet_direct(spec, boundary_of(xyf));
        dev = 0;
        Scalar lapdev = 0;
        for (long x = 1; x < n; ++x)
            for (long y = 1; y < m; ++y) {
                Scalar d = abs(solxy.at(x, y) + Scalar(x) * y);
                if (d > dev) dev = d;
                Scalar l = abs(discrete_laplacian(xyf, x, y, lam));
                if (l > lapdev) lapdev = l;
            }
        ck.residual("7.solve-xy" + tag, dev, Scalar(0), t.solver);
        ck.residual("7.laplace-xy" + tag, lapdev, Scalar(0), t.main);

        auto ge = grid_exponents(spec);
        for (long j : {1L, n - 1}) {
            GridField u(n, m);
            for (long x = 0; x <= n; ++x)
                for (long y = 0; y <= m; ++y)
                    u.at(x, y) = sin(pi * j * x / n) * mp::sinh(y * ge.alpha[j]);
            lapdev = 0;
            for (long x = 1; x < n; ++x)
                for (long y = 1; y < m; ++y) {
                    Scalar l = abs(discrete_laplacian(u, x, y, lam));
                    if (l > lapdev) lapdev = l;
                }
            ck.residual("7.laplace-u" + std::to_string(j) + tag, lapdev, Scalar(0),
                        t.main);
        }

        // fitted sine coefficients reproduce the identity's weights
        auto c = f1_sine_coefficients(spec);
        for (long j = 1; j < n; ++j)
            ck.residual("7.coef" + tag + "." + std::to_string(j),
                        c[j] * mp::sinh(m * ge.alpha[j]),
                        m * pow_int(Scalar(-1), j) * cot(pi * j / (2 * n)), t.main);
    };

    for (long n = 2; n <= 8; ++n)
        for (long m = 2; m <= 8; ++m)
            combo(n, m, Scalar(1),
                  "(" + std::to_string(n) + "," + std::to_string(m) + ",a0)");
    for (long n : {3L, 5L})
        for (long m : {3L, 6L})
            combo(n, m, Scalar("1.6"),
                  "(" + std::to_string(n) + "," + std::to_string(m) + ",a1.6)");
}

// ---------------------------------------------------------------- criterion 8

std::vector<Finding> crit8(Checker& ck, const PrecisionContext& ctx, const Tiers& t) {
    Scalar pi = const_pi();
    std::vector<Finding> fs;

    {
        PrecisionContext fctx = ctx;
        int e = ctx.digits - 29;
        if (e < 31) e = 31;
        fctx.tail_target = pow(Scalar(10), -e);
        auto fib = fibonacci_arctan_sum(fctx);
        Scalar r = abs(fib.value - atan((sqrt(Scalar(5)) - 1) / 2));
        ck.exact("8.eq2-index", r <= t.relaxed, "n>=1 convention does not match");
        fs.push_back({"eq2-index-convention",
                      "Eq (2) is printed with lower index n=0, but F_0 = 0 leaves that "
                      "term undefined; the sum must start at n=1 to equal the stated "
                      "right side.",
                      "with the n>=1 start, |sum - arctan((sqrt(5)-1)/2)| = " +
                          to_decimal(r, 3) + " after " + std::to_string(fib.terms_used) +
                          " terms"});
    }
    {
        auto r = closed_form_sum(2, 1, ctx);
        ck.exact("8.closed-form", r.matches_expected && !r.matches_printed,
                 "closed-form evidence computation disagrees");
        fs.push_back({"closed-form-constant",
                      "The single-sum closed form equals -x^2/(2n), not the printed "
                      "-x^2/n (forced by setting n=m, x=y in the verified two-sum "
                      "identity: 2n*S = -x^2).",
                      "n=2, x=1: sum = " + to_decimal(r.sum, 10) + "; |sum + 1/4| = " +
                          to_decimal(abs(r.sum - r.expected), 3) +
                          ", |sum + 1/2| = " + to_decimal(abs(r.sum - r.printed_value), 3)});
    }
    {
        GridSpec spec;
        spec.n = 4;
        spec.m = 4;
        auto f1 = eigen_solution_f1(spec);
        auto f2 = eigen_solution_f2(spec);
        Scalar dev = 0, dev_flipped = 0;
        for (long x = 0; x <= 4; ++x)
            for (long y = 0; y <= 4; ++y) {
                Scalar sum = f1.at(x, y) + f2.at(x, y);
                Scalar d = abs(sum + Scalar(x) * y);
                if (d > dev) dev = d;
                // the printed +xm/+ny data flips both solutions
                Scalar df = abs(-sum + Scalar(x) * y);
                if (df > dev_flipped) dev_flipped = df;
            }
        ck.exact("8.f1f2-signs", dev <= t.solver && dev_flipped >= 1,
                 "boundary-sign evidence computation disagrees");
        fs.push_back(
            {"f1f2-boundary-signs",
             "The printed boundary data f1(x,m)=xm, f2(n,y)=ny is inconsistent in sign "
             "with f1+f2=-xy; the data must be -xm and -ny (the boundary trace of -xy).",
             "n=m=4: with -xm/-ny, max|f1+f2+xy| = " + to_decimal(dev, 3) +
                 "; with the printed signs, max deviation = " +
                 to_decimal(dev_flipped, 5)});
    }
    {
        Scalar a("0.7"), th("0.3"), ph("0.7");
        Scalar rhs = 2 / pi * (pi / 2 - th) * (pi / 2 - ph);
        auto s1 = theta_transform_series(a, th, ph, ctx);
        auto s2 = theta_transform_series(1 / a, ph, th, ctx);
        Scalar r1 = abs(s1.value + s2.value - rhs);
        auto s2alt = theta_transform_series(pi * pi / (4 * a), ph, th, ctx);
        Scalar r2 = abs(s1.value + s2alt.value - rhs);
        ck.exact("8.theta-constraint", r1 <= t.main && r2 > Scalar("1e-3"),
                 "alpha*beta evidence computation disagrees");
        fs.push_back(
            {"theta-pair-product-constraint",
             "The doubly infinite theta-transform display states no alpha*beta "
             "constraint; alpha*beta = 1 is adopted (the convention of the two-angle "
             "reciprocal identity it motivates) and verified, while the alpha*beta = "
             "pi^2/4 convention of Eq (5) fails.",
             "alpha=0.7, theta=0.3, phi=0.7: |residual| = " + to_decimal(r1, 3) +
                 " under beta=1/alpha vs " + to_decimal(r2, 5) +
                 " under beta=pi^2/(4 alpha)"});
    }
    {
        Scalar maxr = 0;
        std::vector<Scalar> as = {Scalar("0.5"), Scalar(2)};
        std::vector<Scalar> angs = {Scalar("0.3"), Scalar(1)};
        long points = 0;
        for (long n = 0; n <= 3; ++n)
            for (long m = 0; m <= 3; ++m)
                for (const auto& a : as)
                    for (const auto& th : angs)
                        for (const auto& ph : angs) {
                            auto r = complex_generalization_residual(n, m, a, th, ph, ctx);
                            Scalar d = abs(r.lhs - r.rhs);
                            if (d > maxr) maxr = d;
                            ++points;
                        }
        ck.exact("8.complex-gen", maxr <= t.main,
                 "complex generalization failed numerically: max residual " +
                     to_decimal(maxr, 3));
        fs.push_back({"complex-generalization-unproved",
                      "The closing two-angle complex form is stated without proof; it "
                      "holds numerically at every tested point and is reported as an "
                      "unproved claim, not a theorem.",
                      "max |residual| = " + to_decimal(maxr, 3) + " over " +
                          std::to_string(points) + " parameter points at " +
                          std::to_string(ctx.digits) + " digits"});
    }
    ck.exact("8.finding-count", fs.size() == 5,
             "expected exactly 5 findings, have " + std::to_string(fs.size()));
    return fs;
}

// --------------------------------------------------------------- orchestration

const char* criterion_title(int i) {
    switch (i) {
        case 1: return "reciprocal identity, order grid + closed form + chi4 form";
        case 2: return "triangular-character reciprocal identity + closed form display";
        case 3: return "two-angle reciprocal identity, symmetric form, sign tally";
        case 4: return "elliptic bundle: nome, modular-angle series, quadrature oracle";
        case 5: return "infinite series: telescoping, Fibonacci, Bragg, character pairs";
        case 6: return "lemma kernels under seeded random draws";
        case 7: return "discrete Dirichlet grid: identity, closed form, solvers";
        case 8: return "findings ledger: exactly five recorded discrepancies/claims";
        case 9: return "precision scaling: 100-digit rerun of criteria 1-7";
        default: return "";
    }
}

CriterionResult run_criterion(int index, const PrecisionContext& ctx, const Tiers& t,
                              unsigned long long seed, ValueLog* log,
                              std::vector<Finding>* findings_out) {
    Stopwatch sw;
    CriterionResult res;
    res.index = index;
    res.title = criterion_title(index);
    res.max_residual = 0;
    Checker ck(res, log);
    try {
        switch (index) {
            case 1: crit1(ck, ctx, t); break;
            case 2: crit2(ck, ctx, t); break;
            case 3: crit3(ck, ctx, t); break;
            case 4: crit4(ck, ctx, t); break;
            case 5: crit5(ck, ctx, t); break;
            case 6: crit6(ck, ctx, t, seed); break;
            case 7: crit7(ck, ctx, t, res); break;
            case 8: {
                auto fs = crit8(ck, ctx, t);
                if (findings_out) *findings_out = std::move(fs);
                break;
            }
        }
    } catch (const std::exception& e) {
        res.pass = false;
        ++res.failures;
        res.failure_notes.push_back(std::string("unexpected exception: ") + e.what());
    }
    res.elapsed_ms = sw.elapsed_ms();
    return res;
}

}  // namespace

SuiteResult run_suite(const PrecisionContext& ctx, unsigned long long seed,
                      std::ostream* log) {
    SuiteResult out;
    out.digits = ctx.digits;
    out.seed = seed;
    ctx.apply();
    Tiers t = tiers_for(ctx.digits, false);
    ValueLog base_log;

    auto emit = [log](const CriterionResult& c) {
        if (!log) return;
        *log << "criterion " << c.index << ": " << (c.pass ? "PASS" : "FAIL") << " - "
             << c.title << " (" << c.checks << " checks, " << c.failures
             << " failures, max residual " << to_decimal(c.max_residual, 3) << ", "
             << static_cast<long>(c.elapsed_ms) << " ms)\n";
        for (const auto& n : c.failure_notes) *log << "    " << n << "\n";
        log->flush();
    };

    for (int i = 1; i <= 8; ++i) {
        auto c = run_criterion(i, ctx, t, seed, i <= 7 ? &base_log : nullptr,
                               i == 8 ? &out.findings : nullptr);
        emit(c);
        out.criteria.push_back(std::move(c));
    }

    // criterion 9: rerun 1-7 at 100 digits with the uniform 1e-80 floor
    // (quadrature/truncation-capped checks keep their fixed caps), then bound
    // how far every recorded value moved against the tolerance that was in
    // force at base precision
    {
        Stopwatch sw;
        CriterionResult c9;
        c9.index = 9;
        c9.title = criterion_title(9);
        c9.max_residual = 0;
        PrecisionContext ctx100 = PrecisionContext::make(100);
        ctx100.apply();
        Tiers t100 = tiers_for(100, true);
        ValueLog rerun_log;
        for (int i = 1; i <= 7; ++i) {
            auto c = run_criterion(i, ctx100, t100, seed, &rerun_log, nullptr);
            c9.checks += c.checks;
            if (c.max_residual > c9.max_residual) c9.max_residual = c.max_residual;
            if (!c.pass) {
                c9.pass = false;
                c9.failures += c.failures;
                std::string first =
                    c.failure_notes.empty() ? "(no detail)" : c.failure_notes.front();
                c9.failure_notes.push_back("criterion " + std::to_string(i) +
                                           " rerun at 100 digits: " +
                                           std::to_string(c.failures) +
                                           " failures; first: " + first);
            }
        }
        ctx.apply();
        long moved = 0;
        for (const auto& [label, vt] : base_log) {
            auto it = rerun_log.find(label);
            if (it == rerun_log.end()) continue;
            ++c9.checks;
            Scalar diff = abs(it->second.first - vt.first);
            if (!(diff <= vt.second)) {
                c9.pass = false;
                ++c9.failures;
                if (++moved <= 5)
                    c9.failure_notes.push_back("value moved between precisions: " + label +
                                               " by " + to_decimal(diff, 3));
            }
        }
        if (moved > 5)
            c9.failure_notes.push_back("(" + std::to_string(moved - 5) +
                                       " further moved values suppressed)");
        c9.elapsed_ms = sw.elapsed_ms();
        emit(c9);
        out.criteria.push_back(std::move(c9));
    }

    if (log) {
        *log << "findings (" << out.findings.size() << "):\n";
        for (const auto& f : out.findings)
            *log << "  [" << f.id << "] " << f.statement << "\n      evidence: "
                 << f.evidence << "\n";
        log->flush();
    }
    return out;
}

}  // namespace atanforge
