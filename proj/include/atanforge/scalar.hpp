#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <stdexcept>
#include <string>

namespace atanforge {

namespace mp = boost::multiprecision;

/// Arbitrary-precision real number. Precision (in decimal digits) is taken
/// from the thread's default at construction time; PrecisionContext::apply()
/// sets it, with guard digits beyond the reporting precision.
using Scalar = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

/// Governs every evaluation: working precision, residual tolerance and the
/// truncation policy for infinite series.
struct PrecisionContext {
    int digits = 60;             // reporting precision, decimal digits
    Scalar verify_tolerance;     // absolute residual bound for pass/fail
    long max_terms = 2'000'000;  // cap on infinite-series terms
    Scalar tail_target;          // requested tail bound for truncation

    static constexpr int kGuardDigits = 10;

    // Sets the thread default precision and fills tolerance fields that were
    // left empty. Default tolerance is 10^-(digits-20): 1e-40 at 60 digits,
    // 1e-80 at 100.
    static PrecisionContext make(int digits,
                                 const std::string& tolerance = "",
                                 long max_terms = 2'000'000,
                                 const std::string& tail_target = "");

    void apply() const { Scalar::default_precision(digits + kGuardDigits); }
};

Scalar const_pi();
Scalar const_e();

/// Positive-branch solve of sinh(a) = c via ln(c + sqrt(1+c^2)).
/// Total on finite inputs; odd in c.
Scalar asinh_solve(const Scalar& c);

/// Solve cosh(a) = c with a >= 0 via ln(c + sqrt(c^2-1)).
/// Throws std::domain_error for c < 1.
Scalar acosh_solve(const Scalar& c);

/// Integer power with explicit sign tracking. Repeated squaring for small
/// |e|, exp(e*ln|b|) above the threshold where intermediate magnitudes
/// would churn.
Scalar pow_int(const Scalar& base, long e);

struct ComplexScalar {
    Scalar re, im;

    ComplexScalar() : re(0), im(0) {}
    ComplexScalar(Scalar r, Scalar i) : re(std::move(r)), im(std::move(i)) {}

    ComplexScalar operator+(const ComplexScalar& o) const { return {re + o.re, im + o.im}; }
    ComplexScalar operator-(const ComplexScalar& o) const { return {re - o.re, im - o.im}; }
    ComplexScalar operator*(const ComplexScalar& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    ComplexScalar operator/(const ComplexScalar& o) const {
        Scalar d = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    ComplexScalar operator*(const Scalar& s) const { return {re * s, im * s}; }
};

/// Principal argument in (-pi, pi].
Scalar arg(const ComplexScalar& z);

ComplexScalar sinh(const ComplexScalar& z);

/// Real part of arctan of a complex argument, computed as
/// (1/2) arg((1+iz)/(1-iz)) with the principal argument.
/// Throws std::domain_error at the branch points z = +-i.
Scalar arctan_re(const ComplexScalar& z);

/// Decimal-string rendering at full working precision.
std::string to_decimal(const Scalar& v, int digits);

}  // namespace atanforge
