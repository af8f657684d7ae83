#include "atanforge/lemma_kernels.hpp"

#include "atanforge/finite_identities.hpp"
#include "atanforge/number_theory.hpp"

namespace atanforge {

std::pair<Scalar, Scalar> lemma1_pair(long n, long m, long j, const Scalar& alpha) {
    Scalar pi = const_pi();
    Scalar c = cos(pi * j / (2 * n + 1));
    Scalar left = 2 * atan(pow_int(sqrt(1 + alpha * alpha * c * c) - alpha * c, 2 * m + 1));
    Scalar aj = asinh_solve(alpha * c);
    Scalar right = pi / 2 - atan(mp::sinh((2 * m + 1) * aj));
    return {left, right};
}

std::pair<Scalar, Scalar> lemma2_pair(long n, long m, long j, const Scalar& alpha) {
    Scalar pi = const_pi();
    Scalar c = cos(pi * j / (2 * n + 1));
    Scalar aj = asinh_solve(alpha * c);
    Scalar left = pi / 2 - atan(mp::sinh((2 * m + 1) * aj));
    Scalar right = 0;
    for (long k = -m; k <= m; ++k)
        right += atan(cos(2 * pi * k / (2 * m + 1)) / (alpha * c));
    if (m % 2 != 0) right = -right;
    return {left, right};
}

std::pair<ComplexScalar, ComplexScalar> sinh_factorization_pair(const ComplexScalar& a,
                                                               const ComplexScalar& b, long m) {
    if (m < 0) throw std::domain_error("sinh_factorization_pair: m must be >= 0");
    Scalar pi = const_pi();
    Scalar s(2 * m + 1);
    ComplexScalar left = sinh(a * s) + sinh(b * s);
    ComplexScalar right{pow_int(Scalar(2), 2 * m), Scalar(0)};
    for (long k = -m; k <= m; ++k) {
        ComplexScalar shift{b.re, b.im + 2 * pi * k / (2 * m + 1)};
        right = right * (sinh(a) + sinh(shift));
    }
    return {left, right};
}

std::pair<Scalar, Scalar> lemma3_pair(long n, long m, long j, const Scalar& alpha) {
    Scalar pi = const_pi();
    Scalar c = alpha * cos(pi * j / (2 * n + 1));
    Scalar left = 0, right = 0;
    for (long k = -m; k <= m; ++k) {
        left += atan(cos(2 * pi * k / (2 * m + 1)) / c);
        Scalar t = atan(cos(pi * k / (2 * m + 1)) / c);
        right += (k % 2 == 0) ? t : -t;
    }
    return {left, right};
}

std::pair<Scalar, Scalar> lemma5_pair(const Scalar& z, long m) {
    Scalar pi = const_pi();
    Scalar left = (2 * m + 1) / (mp::cosh((2 * m + 1) * asinh_solve(z)) * sqrt(z * z + 1));
    Scalar right = 0;
    for (long k = -m; k <= m; ++k) {
        Scalar c = cos(pi * k / (2 * m + 1));
        Scalar t = c / (z * z + c * c);
        right += ((m - k) % 2 == 0) ? t : -t;
    }
    return {left, right};
}

namespace {
// sum_{|j|<=n} (-1)^{n+j} (2m+1)/cosh((2m+1) asinh(z c_j)) * c_j/sqrt(1+z^2 c_j^2)
Scalar cosh_kernel_sum(const Scalar& z, long n, long m) {
    Scalar pi = const_pi();
    Scalar total = 0;
    for (long j = -n; j <= n; ++j) {
        Scalar c = cos(pi * j / (2 * n + 1));
        Scalar t = (2 * m + 1) / mp::cosh((2 * m + 1) * asinh_solve(z * c)) * c /
                   sqrt(1 + z * z * c * c);
        total += ((n + j) % 2 == 0) ? t : -t;
    }
    return total;
}
}  // namespace

Scalar lemma6_residual(const Scalar& z, long n, long m) {
    if (z <= 0) throw std::domain_error("lemma6_residual: z must be > 0");
    return cosh_kernel_sum(z, n, m) - cosh_kernel_sum(1 / z, m, n) / (z * z);
}

std::pair<Scalar, Scalar> lemma7_pair(const Scalar& z, long m) {
    require_odd(m, "m");
    if (z == 1 || z == -1) throw std::domain_error("lemma7_pair: z = +-1");
    Scalar pi = const_pi();
    Scalar r = pow_int((1 + z) / (1 - z), m);
    Scalar left = 1 / ((r + 1 / r + 1) * (1 - z * z));
    Scalar right = 0;
    for (long k = 1; k <= 3 * m / 2; ++k) {
        int c = legendre3(k);
        if (!c) continue;
        Scalar t = tan(pi * k / (3 * m));
        right += c * t / (z * z + t * t);
    }
    right /= m * sqrt(Scalar(3));
    return {left, right};
}

namespace {
// left side of the lemma-7 expansion, rational form; w != +-1
Scalar l7_left(const Scalar& w, long m) {
    Scalar r = pow_int((1 + w) / (1 - w), m);
    return 1 / ((r + 1 / r + 1) * (1 - w * w));
}
}  // namespace

Scalar lemma8_residual(const Scalar& z, long n, long m, const PrecisionContext& ctx) {
    if (z <= 0) throw std::domain_error("lemma8_residual: z must be > 0");
    Scalar pi = const_pi();
    Scalar near = pow(Scalar(10), -ctx.digits / 2);
    Scalar first = 0;
    for (long j = 1; j <= 3 * n / 2; ++j) {
        int c = legendre3(j);
        if (!c) continue;
        Scalar t = tan(pi * j / (3 * n));
        if (abs(abs(z * t) - 1) < near)
            throw std::domain_error("lemma8_residual: pole proximity at j=" + std::to_string(j));
        first += c * t * l7_left(z * t, m);
    }
    Scalar second = 0;
    for (long k = 1; k <= 3 * m / 2; ++k) {
        int c = legendre3(k);
        if (!c) continue;
        Scalar u = tan(pi * k / (3 * m));
        if (abs(abs(u / z) - 1) < near)
            throw std::domain_error("lemma8_residual: pole proximity at k=" + std::to_string(k));
        second += c * u * l7_left(u / z, n);
    }
    return m * first - n / (z * z) * second;
}

Lemma9Triple lemma9_triple(const Scalar& s, const Scalar& quad_tol) {
    Lemma9Triple out;
    Scalar pi = const_pi();
    Scalar sqrt3 = sqrt(Scalar(3));
    out.closed_form_atan = pi / 6 - atan(mp::tanh(s) / sqrt3);
    out.closed_form_exp = atan(sqrt3 / (1 + 2 * exp(2 * s)));

    // integrand decays like e^{-2t}; cut at T with the remainder bounded by
    // e^{-2T}/2 and fold that bound into the error estimate
    Scalar T = (s > 1 ? s : Scalar(1)) + 35;
    Scalar tail = exp(-2 * T) / 2;
    auto f = [](const Scalar& t) { return 1 / (2 * mp::cosh(2 * t) + 1); };
    QuadratureResult q = integrate_tanh_sinh(f, s, T, quad_tol / 2);
    out.integral = sqrt3 * q.value;
    out.quadrature_error = sqrt3 * (q.error_estimate + tail);
    out.quadrature_converged = q.converged;
    return out;
}

Scalar th3_symmetric_form_residual(long n, long m, const Scalar& alpha,
                                   const Scalar& theta, const Scalar& phi) {
    Scalar pi = const_pi();
    Scalar direct = th3_half_sum(n, m, alpha, theta, phi);
    Scalar sym = -theta;
    for (long j = 1; j <= n; ++j) {
        Scalar tj = tan((phi + pi * j) / n);
        for (long k = 1; k <= m; ++k)
            sym += atan(alpha * tan((pi * k + theta) / m) / tj);
    }
    return direct - sym;
}

long sign_count_check(long n, const Scalar& phi) {
    require_odd(n, "n");
    require_angle(phi, "phi");
    Scalar pi = const_pi();
    long count = 0;
    for (long j = 1; j <= n; ++j) {
        Scalar t = tan((phi + pi * j) / n);
        if (t == 0) throw std::domain_error("sign_count_check: exact pole");
        count += t > 0 ? 1 : -1;
    }
    return count;
}

}  // namespace atanforge
