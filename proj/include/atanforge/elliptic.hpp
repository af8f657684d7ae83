#pragma once

#include "atanforge/scalar.hpp"
#include "atanforge/series.hpp"

namespace atanforge {

/// Modulus, complement, both complete integrals and the nome as one
/// consistent bundle: k^2 + k'^2 = 1, q = exp(-pi K'/K).
struct EllipticData {
    Scalar k, k_prime, K, K_prime, q;
};

/// Arithmetic-geometric mean, iterated until |a-b| <= 10^-digits * a.
/// Throws std::domain_error for non-positive inputs.
Scalar agm(Scalar a, Scalar b);

/// K = pi/(2 agm(1,k')), K' = pi/(2 agm(1,k)), q = exp(-pi K'/K).
/// Throws std::domain_error unless 0 < k < 1.
EllipticData elliptic_bundle(const Scalar& k, const PrecisionContext& ctx);

/// sum_{n>=0} (-1)^n arctan q^{(2n+1)/2}, truncated with the geometric tail
/// bound q^{(2N+3)/2}/(1-q). Equals arcsin(k)/4.
SeriesOutcome modular_angle_series(const EllipticData& bundle, const PrecisionContext& ctx);

}  // namespace atanforge
