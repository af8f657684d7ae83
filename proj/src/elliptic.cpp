#include "atanforge/elliptic.hpp"

namespace atanforge {

Scalar agm(Scalar a, Scalar b) {
    if (a <= 0 || b <= 0) throw std::domain_error("agm: inputs must be positive");
    Scalar eps = pow(Scalar(10), -(int)Scalar::default_precision());
    for (int i = 0; i < 200; ++i) {
        if (abs(a - b) <= eps * a) break;
        Scalar an = (a + b) / 2;
        b = sqrt(a * b);
        a = an;
    }
    return a;
}

EllipticData elliptic_bundle(const Scalar& k, const PrecisionContext& ctx) {
    (void)ctx;
    if (k <= 0 || k >= 1) throw std::domain_error("elliptic_bundle: k must be in (0,1)");
    EllipticData d;
    d.k = k;
    d.k_prime = sqrt(1 - k * k);
    Scalar pi = const_pi();
    d.K = pi / (2 * agm(Scalar(1), d.k_prime));
    d.K_prime = pi / (2 * agm(Scalar(1), d.k));
    d.q = exp(-pi * d.K_prime / d.K);
    return d;
}

SeriesOutcome modular_angle_series(const EllipticData& bundle, const PrecisionContext& ctx) {
    const Scalar q = bundle.q;
    Scalar sq = sqrt(q);
    // running power q^{(2n+1)/2}, advanced by q each term
    auto p = std::make_shared<Scalar>(sq);
    auto term = [q, p](long n) {
        Scalar t = atan(*p);
        *p *= q;
        return (n % 2 == 0) ? t : -t;
    };
    auto tail = [q, p](long) {
        return *p / (1 - q);  // *p already holds q^{(2N+3)/2}
    };
    return sum_with_tail(term, tail, ctx, 0);
}

}  // namespace atanforge
