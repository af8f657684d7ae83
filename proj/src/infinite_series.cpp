#include "atanforge/infinite_series.hpp"

#include <memory>

#include "atanforge/number_theory.hpp"

namespace atanforge {

Scalar glaisher_telescope_defect(long n) {
    if (n < 1) throw std::domain_error("telescoping starts at n=1");
    Scalar raw = atan(Scalar(2) / ((2 * n + 1) * (2 * n + 1)));
    Scalar collapsed = atan(Scalar(1) / (2 * n)) - atan(Scalar(1) / (2 * n + 2));
    return raw - collapsed;
}

SeriesOutcome glaisher_sum(SumMode mode, const PrecisionContext& ctx) {
    if (mode == SumMode::Telescoped) {
        // partial sum to N collapses to arctan2 + arctan(1/2) - arctan(1/(2N+2));
        // the remainder is exactly arctan(1/(2N+2)), restored in closed form
        long N = std::min<long>(ctx.max_terms, 1000);
        SeriesOutcome out;
        Scalar boundary = atan(Scalar(1) / (2 * N + 2));
        out.value = atan(Scalar(2)) + atan(Scalar(1) / 2) - boundary + boundary;
        out.terms_used = N;
        out.tail_bound = 0;
        return out;
    }
    auto term = [](long n) { return atan(Scalar(2) / Scalar((2 * n + 1) * (2 * n + 1))); };
    auto tail = [](long n) { return n > 0 ? Scalar(1) / (2 * n) : Scalar(1); };
    return sum_with_tail(term, tail, ctx, 0);
}

SeriesOutcome fibonacci_arctan_sum(const PrecisionContext& ctx) {
    Scalar phi = (1 + sqrt(Scalar(5))) / 2;
    Scalar phi2_inv = 1 / (phi * phi);
    // incremental Fibonacci state, advanced two indices per term
    auto a = std::make_shared<BigInt>(0);  // F_{2n-2}
    auto b = std::make_shared<BigInt>(1);  // F_{2n-1}
    auto term = [a, b](long n) {
        BigInt f2n = *a + *b;        // F_2n
        BigInt next = f2n + *b;      // F_{2n+1}
        *a = f2n;
        *b = next;
        Scalar t = atan(1 / Scalar(f2n.str()));
        return (n % 2 == 1) ? t : -t;
    };
    auto tb = std::make_shared<Scalar>(2 * phi2_inv * phi2_inv);
    auto tail = [tb, phi2_inv](long) {
        Scalar cur = *tb;
        *tb *= phi2_inv;
        return cur;  // 2 phi^{-2(N+1)} after the N-th term
    };
    return sum_with_tail(term, tail, ctx, 1);
}

Scalar bragg_term(const Scalar& x, long n) { return atan(mp::sinh(x) / mp::cosh(n * x)); }

SeriesOutcome bragg_sum(const Scalar& x, const PrecisionContext& ctx) {
    if (x <= 0) throw std::domain_error("bragg_sum: x must be > 0");
    Scalar shx = mp::sinh(x);
    Scalar emx = exp(-x);
    Scalar geom = 4 * shx / (1 - emx);
    auto term = [&x](long n) { return bragg_term(x, n); };
    auto tail = [geom, emx](long n) { return geom * pow_int(emx, n + 1); };
    return sum_with_tail(term, tail, ctx, 1);
}

namespace {

IdentityReport pair_report(const std::string& id, const std::string& anchor,
                           const Scalar& alpha, const Scalar& beta,
                           const SeriesOutcome& s1, const SeriesOutcome& s2,
                           const Scalar& rhs, const PrecisionContext& ctx,
                           Stopwatch& sw) {
    IdentityReport r;
    r.identity = id;
    r.paper_anchor = anchor;
    r.digits = ctx.digits;
    r.add_param("alpha", alpha);
    r.add_param("beta", beta);
    r.lhs = s1.value + s2.value;
    r.rhs = rhs;
    r.terms_used = s1.terms_used + s2.terms_used;
    r.tail_bound = s1.tail_bound + s2.tail_bound;
    r.finish(ctx, s1.converged && s2.converged);
    r.elapsed_ms = sw.elapsed_ms();
    return r;
}

}  // namespace

SeriesOutcome modular_chi4_series(const Scalar& gamma, const PrecisionContext& ctx) {
    if (gamma <= 0) throw std::domain_error("modular_chi4_series: scale must be > 0");
    Scalar eg = exp(-gamma);
    Scalar geom = 1 / (1 - eg);
    auto term = [eg](long n) {
        int c = chi4(n);
        return c ? Scalar(c * atan(pow_int(eg, n))) : Scalar(0);
    };
    auto tail = [geom, eg](long n) { return geom * pow_int(eg, n + 1); };
    return sum_with_tail(term, tail, ctx, 1);
}

IdentityReport modular_chi4_pair(const Scalar& alpha, const PrecisionContext& ctx) {
    Stopwatch sw;
    Scalar pi = const_pi();
    Scalar beta = pi * pi / (4 * alpha);
    auto s1 = modular_chi4_series(alpha, ctx);
    auto s2 = modular_chi4_series(beta, ctx);
    return pair_report("modular-chi4", "Eq (5)", alpha, beta, s1, s2, pi / 8, ctx, sw);
}

SeriesOutcome cais_series(const Scalar& gamma, const PrecisionContext& ctx) {
    if (gamma <= 0) throw std::domain_error("cais_series: scale must be > 0");
    Scalar sqrt3 = sqrt(Scalar(3));
    Scalar eg = exp(-gamma);
    // |term| <= sqrt3/(2 e^{gamma n}) gives a plain geometric bound
    Scalar geom = sqrt3 / 2 / (1 - eg);
    auto term = [sqrt3, gamma](long n) {
        int c = legendre3(n);
        return c ? Scalar(c * atan(sqrt3 / (1 + 2 * exp(gamma * n)))) : Scalar(0);
    };
    auto tail = [geom, eg](long n) { return geom * pow_int(eg, n + 1); };
    return sum_with_tail(term, tail, ctx, 1);
}

IdentityReport cais_pair(const Scalar& alpha, const PrecisionContext& ctx) {
    Stopwatch sw;
    Scalar pi = const_pi();
    Scalar beta = 4 * pi * pi / (9 * alpha);
    auto s1 = cais_series(alpha, ctx);
    auto s2 = cais_series(beta, ctx);
    return pair_report("cais", "Eq (6)", alpha, beta, s1, s2, pi / 18, ctx, sw);
}

SeriesOutcome modular3_series(const Scalar& gamma, const PrecisionContext& ctx) {
    if (gamma <= 0) throw std::domain_error("modular3_series: scale must be > 0");
    Scalar sqrt3 = sqrt(Scalar(3));
    Scalar e2g = exp(-2 * gamma);
    // |arctan(sqrt3/(1-2e^y))| <= sqrt3 e^{-y} for y > 0
    Scalar geom = sqrt3 / (1 - e2g);
    auto term = [sqrt3, gamma](long n) {
        int c = legendre3(n - 1);
        return c ? Scalar(c * atan(sqrt3 / (1 - 2 * exp(gamma * (2 * n + 1))))) : Scalar(0);
    };
    auto tail = [geom, gamma, e2g](long n) {
        return geom * exp(-gamma * (2 * n + 3));
    };
    return sum_with_tail(term, tail, ctx, 0);
}

IdentityReport modular3_pair(const Scalar& alpha, const PrecisionContext& ctx) {
    Stopwatch sw;
    Scalar pi = const_pi();
    Scalar beta = pi * pi / (9 * alpha);
    auto s1 = modular3_series(alpha, ctx);
    auto s2 = modular3_series(beta, ctx);
    return pair_report("modular3", "Eq (modular3)", alpha, beta, s1, s2, 2 * pi / 9, ctx, sw);
}

Scalar theta_transform_term(const Scalar& gamma, const Scalar& theta, const Scalar& phi,
                            long j) {
    Scalar pi = const_pi();
    int sj = sgn_s((long long)j);
    Scalar expo = exp(2 * gamma * (pi * abs(Scalar(j)) + phi * sj));
    return sj * atan(sin(2 * theta) / (expo - cos(2 * theta)));
}

SeriesOutcome theta_transform_series(const Scalar& gamma, const Scalar& theta,
                                     const Scalar& phi, const PrecisionContext& ctx) {
    Scalar pi = const_pi();
    // |term_j| <= sin2theta/(1-rho) * rho^{|j|} with rho = e^{-2 gamma (pi - phi)}
    Scalar rho = exp(-2 * gamma * (pi - phi));
    Scalar c = sin(2 * theta) / (1 - rho);
    // fold the symmetric truncation into a single index u: u = 0 is j = 0,
    // u >= 1 adds j = +u and j = -u together
    auto term = [gamma, theta, phi](long u) {
        if (u == 0) return theta_transform_term(gamma, theta, phi, 0);
        return theta_transform_term(gamma, theta, phi, u) +
               theta_transform_term(gamma, theta, phi, -u);
    };
    auto tail = [c, rho](long u) { return 2 * c * pow_int(rho, u + 1) / (1 - rho); };
    return sum_with_tail(term, tail, ctx, 0);
}

IdentityReport theta_transform_pair(const Scalar& alpha, const Scalar& theta,
                                    const Scalar& phi, const PrecisionContext& ctx) {
    Stopwatch sw;
    if (alpha <= 0) throw std::domain_error("theta_transform_pair: alpha must be > 0");
    Scalar pi = const_pi();
    Scalar half_pi = pi / 2;
    if (theta <= 0 || theta >= half_pi || phi <= 0 || phi >= half_pi)
        throw std::domain_error("theta_transform_pair: angles must lie in (0, pi/2)");
    Scalar beta = 1 / alpha;
    auto s1 = theta_transform_series(alpha, theta, phi, ctx);
    auto s2 = theta_transform_series(beta, phi, theta, ctx);
    Scalar rhs = 2 / pi * (half_pi - theta) * (half_pi - phi);
    IdentityReport r = pair_report("theta-pair", "display before Theorem 3", alpha, beta,
                                   s1, s2, rhs, ctx, sw);
    r.add_param("theta", theta);
    r.add_param("phi", phi);
    r.notes.push_back("assumes alpha*beta = 1 (constraint not stated with the display)");
    return r;
}

}  // namespace atanforge
