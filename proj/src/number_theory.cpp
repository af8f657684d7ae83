#include "atanforge/number_theory.hpp"

namespace atanforge {

int chi4(long long n) {
    long long r = ((n % 4) + 4) % 4;
    if (r == 1) return 1;
    if (r == 3) return -1;
    return 0;
}

int legendre3(long long j) {
    long long r = ((j % 3) + 3) % 3;
    if (r == 1) return 1;
    if (r == 2) return -1;
    return 0;
}

int sgn_s(long long x) { return x >= 0 ? 1 : -1; }
int sgn_s(const Scalar& x) { return x >= 0 ? 1 : -1; }

BigInt fibonacci(unsigned long n) {
    BigInt a = 0, b = 1;
    for (unsigned long i = 0; i < n; ++i) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return a;
}

long long alternating_sum_check(long long n) {
    if (n < 0) throw std::domain_error("alternating_sum_check: n must be >= 0");
    long long s = 0;
    for (long long j = -n; j <= n; ++j) s += (j % 2 == 0) ? 1 : -1;
    return s;
}

long long legendre3_partial_sum(long long n) {
    if (n < 1 || n % 2 == 0)
        throw std::domain_error("legendre3_partial_sum: n must be odd and positive");
    long long s = 0;
    for (long long j = 1; j <= 3 * n / 2; ++j) s += legendre3(j);
    return s;
}

}  // namespace atanforge
