#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "atanforge/scalar.hpp"

namespace atanforge {

using BigInt = mp::cpp_int;

/// Dirichlet character mod 4: 1, 0, -1, 0 on residues 1, 2, 3, 0.
/// Exact integer, never a floating sin evaluation.
int chi4(long long n);

/// Legendre symbol mod 3: 1, -1, 0 on residues 1, 2, 0.
int legendre3(long long j);

/// The sign convention s(x) used throughout: sign function taking the value
/// 1 at 0.
int sgn_s(long long x);
int sgn_s(const Scalar& x);

/// F_0 = 0, F_1 = 1, exact big-integer recurrence.
BigInt fibonacci(unsigned long n);

/// sum_{|j|<=n} (-1)^j; equals (-1)^n.
long long alternating_sum_check(long long n);

/// sum_{j=1}^{floor(3n/2)} (j/3) for odd positive n; equals 1.
long long legendre3_partial_sum(long long n);

}  // namespace atanforge
