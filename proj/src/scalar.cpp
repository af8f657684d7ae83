#include "atanforge/scalar.hpp"

namespace atanforge {

PrecisionContext PrecisionContext::make(int digits, const std::string& tolerance,
                                        long max_terms, const std::string& tail_target) {
    if (digits < 15) throw std::invalid_argument("digits must be >= 15");
    PrecisionContext ctx;
    ctx.digits = digits;
    ctx.max_terms = max_terms;
    if (ctx.max_terms < 1) throw std::invalid_argument("max_terms must be >= 1");
    ctx.apply();
    Scalar ten(10);
    ctx.verify_tolerance =
        tolerance.empty() ? pow(ten, -(digits - 20)) : Scalar(tolerance);
    ctx.tail_target =
        tail_target.empty() ? ctx.verify_tolerance / 100 : Scalar(tail_target);
    if (ctx.verify_tolerance < pow(ten, -digits + 10))
        throw std::invalid_argument("verify_tolerance below guard-digit margin");
    if (ctx.tail_target <= 0) throw std::invalid_argument("tail_target must be > 0");
    return ctx;
}

Scalar const_pi() {
    Scalar p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

Scalar const_e() { return exp(Scalar(1)); }

Scalar asinh_solve(const Scalar& c) {
    if (c < 0) return -asinh_solve(Scalar(-c));
    return log(c + sqrt(1 + c * c));
}

Scalar acosh_solve(const Scalar& c) {
    if (c < 1) throw std::domain_error("acosh_solve: argument must be >= 1");
    return log(c + sqrt(c * c - 1));
}

Scalar pow_int(const Scalar& base, long e) {
    if (e == 0) return Scalar(1);
    if (e < 0) return 1 / pow_int(base, -e);
    bool negative = base < 0 && (e % 2 != 0);
    Scalar b = abs(base);
    Scalar r;
    if (e > 64) {
        r = exp(Scalar(e) * log(b));
    } else {
        r = 1;
        Scalar p = b;
        long k = e;
        while (k > 0) {
            if (k & 1) r *= p;
            k >>= 1;
            if (k) p *= p;
        }
    }
    return negative ? -r : r;
}

Scalar arg(const ComplexScalar& z) { return atan2(z.im, z.re); }

ComplexScalar sinh(const ComplexScalar& z) {
    using mp::sinh;
    using mp::cosh;
    return {sinh(z.re) * cos(z.im), cosh(z.re) * sin(z.im)};
}

Scalar arctan_re(const ComplexScalar& z) {
    ComplexScalar iz{-z.im, z.re};
    ComplexScalar num{1 + iz.re, iz.im};
    ComplexScalar den{1 - iz.re, -iz.im};
    if ((num.re == 0 && num.im == 0) || (den.re == 0 && den.im == 0))
        throw std::domain_error("arctan_re: branch point z = +-i");
    return arg(num / den) / 2;
}

std::string to_decimal(const Scalar& v, int digits) {
    return v.str(digits + PrecisionContext::kGuardDigits);
}

}  // namespace atanforge
