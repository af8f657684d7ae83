#pragma once

#include "atanforge/report.hpp"
#include "atanforge/scalar.hpp"

namespace atanforge {

/// Parameters of the reciprocal identities: order pair (n,m) and the scale
/// alpha with beta = 1/alpha.
struct ReciprocalParams {
    long n = 0, m = 0;
    Scalar alpha;
    Scalar beta() const { return 1 / alpha; }
};

struct AngleParams {
    Scalar theta, phi;  // both strictly inside (0, pi/2)
};

/// sum_{|j|<=n} (-1)^{n+j} arctan((sqrt(1+a^2 cos^2(pi j/(2n+1))) - a cos(pi j/(2n+1)))^{2m+1})
Scalar th1_half_sum(long n, long m, const Scalar& alpha);

/// th1_half_sum(n,m,a) + th1_half_sum(m,n,1/a) against pi/4.
IdentityReport th1_residual(const ReciprocalParams& p, const PrecisionContext& ctx);

/// The chi4-rearranged form of the same identity, sums over j=1..2n with
/// sin(pi j/(4n+2)) arguments, against
/// pi/8 - (1/2)(-1)^n arctan(sqrt(1+a^2)-a)^{2m+1} - (1/2)(-1)^m arctan(sqrt(1+b^2)-b)^{2n+1}.
IdentityReport th1_chi4_form_residual(const ReciprocalParams& p, const PrecisionContext& ctx);

/// sum_{j=1}^{floor(3n/2)} (j/3) arctan(sqrt(3)/(1+2 r_j^m)),
/// r_j = (a+tan(pi j/3n))/(a-tan(pi j/3n)). An exact pole of the r_j
/// denominator contributes the two-sided limit 0; an exact zero of
/// 1+2 r_j^m throws.
Scalar th2_half_sum(long n, long m, const Scalar& alpha);

IdentityReport th2_residual(const ReciprocalParams& p, const PrecisionContext& ctx);

/// sum_{|j|<=(n-1)/2} s(j) arctan(sin 2theta / (R_j^{m s(j)} - cos 2theta)),
/// R_j = (a+tan((phi+pi j)/n))/(a-tan((phi+pi j)/n)).
Scalar th3_half_sum(long n, long m, const Scalar& alpha, const Scalar& theta,
                    const Scalar& phi);

IdentityReport th3_residual(const ReciprocalParams& p, const AngleParams& ang,
                            const PrecisionContext& ctx);

/// Single-parameter corollary of the two-angle identity: n=m, alpha=1,
/// phi=theta; right side pi/4 - theta.
IdentityReport cor3_sum(long n, const Scalar& theta, const PrecisionContext& ctx);

/// The closing two-angle complex form. Holds numerically but is stated
/// without proof; reports carry an explicit unproved-claim note.
IdentityReport complex_generalization_residual(long n, long m, const Scalar& alpha,
                                               const Scalar& theta, const Scalar& phi,
                                               const PrecisionContext& ctx);

void require_odd(long v, const char* name);
void require_angle(const Scalar& v, const char* name);

}  // namespace atanforge
