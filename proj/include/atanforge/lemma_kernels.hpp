#pragma once

#include <utility>

#include "atanforge/quadrature.hpp"
#include "atanforge/scalar.hpp"

namespace atanforge {

/// Both-sides evaluators for the proof machinery. Each *_pair returns the
/// two routes to the same quantity; agreement is the check.

/// 2 arctan((sqrt(1+a^2 c^2)-a c)^{2m+1})  vs  pi/2 - arctan(sinh((2m+1) a_j)),
/// a_j = asinh(a cos(pi j/(2n+1))).
std::pair<Scalar, Scalar> lemma1_pair(long n, long m, long j, const Scalar& alpha);

/// pi/2 - arctan(sinh((2m+1) a_j))  vs
/// (-1)^m sum_{|k|<=m} arctan(cos(2 pi k/(2m+1)) / (a cos(pi j/(2n+1)))).
/// Valid for |j| <= n, where cos(pi j/(2n+1)) > 0 keeps every arctan on the
/// principal branch.
std::pair<Scalar, Scalar> lemma2_pair(long n, long m, long j, const Scalar& alpha);

/// sinh((2m+1)a) + sinh((2m+1)b)  vs  2^{2m} prod_{|k|<=m} (sinh a + sinh(b + 2 pi i k/(2m+1))).
std::pair<ComplexScalar, ComplexScalar> sinh_factorization_pair(const ComplexScalar& a,
                                                               const ComplexScalar& b, long m);

/// Odd-function resummation: sum over cos(2 pi k/(2m+1)) vs alternating sum
/// over cos(pi k/(2m+1)).
std::pair<Scalar, Scalar> lemma3_pair(long n, long m, long j, const Scalar& alpha);

/// Partial-fraction expansion of (2m+1)/(cosh((2m+1) asinh z) sqrt(z^2+1)).
std::pair<Scalar, Scalar> lemma5_pair(const Scalar& z, long m);

/// Cosh-kernel sum transformation: LHS(z;n,m) - (1/z^2) LHS(1/z;m,n); vanishes.
Scalar lemma6_residual(const Scalar& z, long n, long m);

/// Partial-fraction expansion of the sinh(m t)/sinh(3m t) kernel, with the
/// left side in the branch-free rational form r = ((1+z)/(1-z))^m so real
/// |z| > 1 needs no complex detour. Throws at z = +-1.
std::pair<Scalar, Scalar> lemma7_pair(const Scalar& z, long m);

/// Two-sum transformation built from the lemma-7 kernel; vanishes.
/// Throws when any substituted argument sits within 10^(-digits/2) of the
/// real poles at +-1.
Scalar lemma8_residual(const Scalar& z, long n, long m, const PrecisionContext& ctx);

/// (sqrt(3) * quadrature of int_s^inf sinh t/sinh 3t dt,
///  pi/6 - arctan(tanh s / sqrt 3),
///  arctan(sqrt 3/(1+2 e^{2s}))).
struct Lemma9Triple {
    Scalar integral;
    Scalar closed_form_atan;
    Scalar closed_form_exp;
    Scalar quadrature_error;
    bool quadrature_converged = true;
};
Lemma9Triple lemma9_triple(const Scalar& s, const Scalar& quad_tol);

/// th3 half sum minus its double-sum symmetric form (-theta + sum_jk ...);
/// vanishes.
Scalar th3_symmetric_form_residual(long n, long m, const Scalar& alpha,
                                   const Scalar& theta, const Scalar& phi);

/// sum_{j=1}^n sgn(tan((phi+pi j)/n)); equals 1 for odd n, phi in (0,pi/2).
long sign_count_check(long n, const Scalar& phi);

}  // namespace atanforge
