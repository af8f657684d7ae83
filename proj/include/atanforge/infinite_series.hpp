#pragma once

#include "atanforge/report.hpp"
#include "atanforge/scalar.hpp"
#include "atanforge/series.hpp"

namespace atanforge {

enum class SumMode { Direct, Telescoped };

/// sum_{n>=0} arctan(2/(2n+1)^2) = pi/2.
/// Telescoped mode collapses the n>=1 terms through
/// arctan(2/(2n+1)^2) = arctan(1/2n) - arctan(1/(2n+2)) and restores the
/// limit term, so its tail bound is exactly zero. Direct mode sums raw
/// terms with tail bound 1/(2N).
SeriesOutcome glaisher_sum(SumMode mode, const PrecisionContext& ctx);

/// Difference between a raw term and its telescoped re-expression; the
/// acceleration oracle behind the telescoped mode.
Scalar glaisher_telescope_defect(long n);

/// sum_{n>=1} (-1)^{n+1} arctan(1/F_{2n}) = arctan((sqrt5-1)/2).
/// The sum starts at n=1: F_0 = 0 leaves the printed n=0 term undefined,
/// and the n>=1 convention reproduces the right side. Tail bound
/// 2 phi^{-2(N+1)} (phi the golden ratio), valid for the alternating
/// remainder.
SeriesOutcome fibonacci_arctan_sum(const PrecisionContext& ctx);

/// sum_{n>=1} arctan(sinh x / cosh nx) = 3 pi/4 - arctan e^x for x > 0.
/// The n=0 term arctan(sinh x) is excluded: including it shifts the sum to
/// 3 pi/4 - arctan e^{-x}, so the n>=1 start is what matches the stated
/// right side. Tail bound 4 sinh x e^{-x(N+1)}/(1-e^{-x}).
SeriesOutcome bragg_sum(const Scalar& x, const PrecisionContext& ctx);

/// Value of the single n-indexed arctan(sinh x/cosh nx) term.
Scalar bragg_term(const Scalar& x, long n);

/// sum_{n>=1} chi4(n) arctan e^{-alpha n} + same at beta = pi^2/(4 alpha) = pi/8.
IdentityReport modular_chi4_pair(const Scalar& alpha, const PrecisionContext& ctx);

/// Single chi4-weighted series at a given exponent scale.
SeriesOutcome modular_chi4_series(const Scalar& gamma, const PrecisionContext& ctx);

/// sum_{n>=1} (n/3) arctan(sqrt3/(1+2 e^{alpha n})) + same at beta = 4 pi^2/(9 alpha) = pi/18.
IdentityReport cais_pair(const Scalar& alpha, const PrecisionContext& ctx);
SeriesOutcome cais_series(const Scalar& gamma, const PrecisionContext& ctx);

/// sum_{n>=0} ((n-1)/3) arctan(sqrt3/(1-2 e^{alpha(2n+1)})) + same at
/// beta = pi^2/(9 alpha) = 2 pi/9.
IdentityReport modular3_pair(const Scalar& alpha, const PrecisionContext& ctx);
SeriesOutcome modular3_series(const Scalar& gamma, const PrecisionContext& ctx);

/// Doubly infinite theta-transform pair:
/// sum_{j in Z} s(j) arctan(sin 2theta/(e^{2 alpha(pi|j| + phi s(j))} - cos 2theta))
/// + mirrored sum at beta with theta <-> phi = (2/pi)(pi/2-theta)(pi/2-phi).
/// beta = 1/alpha: the display states no explicit constraint, so the
/// Theorem-3 product convention is adopted and noted in every report.
IdentityReport theta_transform_pair(const Scalar& alpha, const Scalar& theta,
                                    const Scalar& phi, const PrecisionContext& ctx);
SeriesOutcome theta_transform_series(const Scalar& gamma, const Scalar& theta,
                                     const Scalar& phi, const PrecisionContext& ctx);

/// Value of the j-th theta-transform summand at scale gamma.
Scalar theta_transform_term(const Scalar& gamma, const Scalar& theta, const Scalar& phi,
                            long j);

}  // namespace atanforge
