#include "atanforge/dirichlet_grid.hpp"

namespace atanforge {

GridExponents grid_exponents(const GridSpec& spec) {
    spec.validate();
    Scalar pi = const_pi();
    GridExponents ge;
    ge.alpha.resize(spec.n + 1);
    ge.beta.resize(spec.m + 1);
    Scalar a = spec.aniso_alpha;
    for (long j = 0; j <= spec.n; ++j)
        ge.alpha[j] = 2 * asinh_solve(a * sin(pi * j / (2 * spec.n)));
    for (long k = 0; k <= spec.m; ++k)
        ge.beta[k] = 2 * asinh_solve(sin(pi * k / (2 * spec.m)) / a);
    return ge;
}

GridExponents grid_exponents_base(const GridSpec& spec) {
    spec.validate();
    Scalar pi = const_pi();
    GridExponents ge;
    ge.alpha.resize(spec.n + 1);
    ge.beta.resize(spec.m + 1);
    for (long j = 0; j <= spec.n; ++j)
        ge.alpha[j] = acosh_solve(2 - cos(pi * j / spec.n));
    for (long k = 0; k <= spec.m; ++k)
        ge.beta[k] = acosh_solve(2 - cos(pi * k / spec.m));
    return ge;
}

IdentityReport dirichlet_identity_residual(const GridSpec& spec, long x, long y,
                                           const PrecisionContext& ctx) {
    Stopwatch sw;
    spec.validate();
    if (x < 1 || x > spec.n || y < 1 || y > spec.m)
        throw std::domain_error("dirichlet_identity_residual: point outside grid");
    Scalar pi = const_pi();
    GridExponents ge = grid_exponents(spec);
    Scalar first = 0;
    for (long j = 1; j <= spec.n; ++j) {
        // j = n: cot(pi/2) and sin(pi j x/n) both vanish; summed as written
        first += pow_int(Scalar(-1), j) * cos(pi * j / (2 * spec.n)) / sin(pi * j / (2 * spec.n)) *
                 mp::sinh(y * ge.alpha[j]) / mp::sinh(spec.m * ge.alpha[j]) *
                 sin(pi * j * x / spec.n);
    }
    Scalar second = 0;
    for (long k = 1; k <= spec.m; ++k) {
        second += pow_int(Scalar(-1), k) * cos(pi * k / (2 * spec.m)) / sin(pi * k / (2 * spec.m)) *
                  mp::sinh(x * ge.beta[k]) / mp::sinh(spec.n * ge.beta[k]) *
                  sin(pi * k * y / spec.m);
    }
    IdentityReport r;
    r.identity = "dirichlet";
    r.paper_anchor = "grid identity";
    r.digits = ctx.digits;
    r.add_param("n", (long long)spec.n);
    r.add_param("m", (long long)spec.m);
    r.add_param("x", (long long)x);
    r.add_param("y", (long long)y);
    r.add_param("a", spec.aniso_alpha);
    r.lhs = spec.m * first + spec.n * second;
    r.rhs = Scalar(-x) * y;
    r.finish(ctx);
    r.elapsed_ms = sw.elapsed_ms();
    return r;
}

ClosedFormResult closed_form_sum(long n, long x, const PrecisionContext& ctx) {
    if (n < 2) throw std::domain_error("closed_form_sum: n must be >= 2");
    if (x < 1 || x > n) throw std::domain_error("closed_form_sum: x must be in [1,n]");
    Scalar pi = const_pi();
    GridSpec spec;
    spec.n = n;
    spec.m = n;
    GridExponents ge = grid_exponents(spec);
    ClosedFormResult res;
    res.sum = 0;
    for (long j = 1; j <= n; ++j) {
        res.sum += pow_int(Scalar(-1), j) * cos(pi * j / (2 * n)) / sin(pi * j / (2 * n)) *
                   mp::sinh(x * ge.alpha[j]) / mp::sinh(n * ge.alpha[j]) * sin(pi * j * x / n);
    }
    res.expected = Scalar(-x) * x / (2 * n);
    res.printed_value = Scalar(-x) * x / n;
    res.matches_expected = abs(res.sum - res.expected) <= ctx.verify_tolerance;
    res.matches_printed = abs(res.sum - res.printed_value) <= ctx.verify_tolerance;
    return res;
}

Scalar discrete_laplacian(const GridField& f, long x, long y, const Scalar& lambda) {
    if (x <= 0 || x >= f.n || y <= 0 || y >= f.m)
        throw std::domain_error("discrete_laplacian: point must be interior");
    return f.at(x - 1, y) + f.at(x + 1, y) + lambda * (f.at(x, y - 1) + f.at(x, y + 1)) -
           (2 + 2 * lambda) * f.at(x, y);
}

GridField solve_dirichlet_direct(const GridSpec& spec, const GridField& boundary) {
    spec.validate();
    if (boundary.n != spec.n || boundary.m != spec.m)
        throw std::invalid_argument("solve_dirichlet_direct: dimension mismatch");
    const long n = spec.n, m = spec.m;
    const long nx = n - 1, ny = m - 1, N = nx * ny;
    Scalar lam = spec.lambda();
    auto idx = [&](long x, long y) { return (x - 1) * ny + (y - 1); };

    // dense assembly; the interior never exceeds a few hundred unknowns here
    std::vector<Scalar> A(N * N, Scalar(0)), b(N, Scalar(0));
    for (long x = 1; x <= nx; ++x) {
        for (long y = 1; y <= ny; ++y) {
            long row = idx(x, y);
            A[row * N + row] = -(2 + 2 * lam);
            auto couple = [&](long xx, long yy, const Scalar& w) {
                if (xx == 0 || xx == n || yy == 0 || yy == m)
                    b[row] -= w * boundary.at(xx, yy);
                else
                    A[row * N + idx(xx, yy)] = w;
            };
            couple(x - 1, y, Scalar(1));
            couple(x + 1, y, Scalar(1));
            couple(x, y - 1, lam);
            couple(x, y + 1, lam);
        }
    }

    // Gaussian elimination with partial pivoting at working precision
    std::vector<long> perm(N);
    for (long i = 0; i < N; ++i) perm[i] = i;
    for (long col = 0; col < N; ++col) {
        long piv = col;
        Scalar best = abs(A[perm[col] * N + col]);
        for (long r = col + 1; r < N; ++r) {
            Scalar v = abs(A[perm[r] * N + col]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0) throw std::runtime_error("solve_dirichlet_direct: numerical breakdown");
        std::swap(perm[col], perm[piv]);
        long prow = perm[col];
        for (long r = col + 1; r < N; ++r) {
            long rr = perm[r];
            Scalar f = A[rr * N + col] / A[prow * N + col];
            if (f == 0) continue;
            A[rr * N + col] = 0;
            for (long c = col + 1; c < N; ++c) A[rr * N + c] -= f * A[prow * N + c];
            b[rr] -= f * b[prow];
        }
    }
    std::vector<Scalar> sol(N);
    for (long r = N - 1; r >= 0; --r) {
        long rr = perm[r];
        Scalar acc = b[rr];
        for (long c = r + 1; c < N; ++c) acc -= A[rr * N + c] * sol[c];
        sol[r] = acc / A[rr * N + r];
    }

    GridField out = boundary;
    for (long x = 1; x <= nx; ++x)
        for (long y = 1; y <= ny; ++y) out.at(x, y) = sol[idx(x, y)];
    return out;
}

std::vector<Scalar> f1_sine_coefficients(const GridSpec& spec) {
    spec.validate();
    Scalar pi = const_pi();
    GridExponents ge = grid_exponents(spec);
    const long n = spec.n, m = spec.m;
    std::vector<Scalar> c(n, Scalar(0));  // index 1..n-1
    for (long j = 1; j < n; ++j) {
        Scalar proj = 0;
        for (long x = 1; x < n; ++x)
            proj += Scalar(-x) * m * sin(pi * j * x / n);
        c[j] = 2 * proj / (n * mp::sinh(m * ge.alpha[j]));
    }
    return c;
}

GridField eigen_solution_f1(const GridSpec& spec) {
    spec.validate();
    Scalar pi = const_pi();
    GridExponents ge = grid_exponents(spec);
    const long n = spec.n, m = spec.m;
    std::vector<Scalar> c = f1_sine_coefficients(spec);
    GridField f(n, m);
    for (long x = 1; x < n; ++x)
        for (long y = 1; y < m; ++y) {
            Scalar v = 0;
            for (long j = 1; j < n; ++j)
                v += c[j] * sin(pi * j * x / n) * mp::sinh(y * ge.alpha[j]);
            f.at(x, y) = v;
        }
    // boundary rows carry the prescribed data; rows win at corners
    for (long x = 0; x <= n; ++x) {
        f.at(x, 0) = 0;
        f.at(x, m) = Scalar(-x) * m;
    }
    for (long y = 1; y < m; ++y) {
        f.at(0, y) = 0;
        f.at(n, y) = 0;
    }
    return f;
}

GridField eigen_solution_f2(const GridSpec& spec) {
    spec.validate();
    Scalar pi = const_pi();
    GridExponents ge = grid_exponents(spec);
    const long n = spec.n, m = spec.m;
    std::vector<Scalar> c(m, Scalar(0));
    for (long k = 1; k < m; ++k) {
        Scalar proj = 0;
        for (long y = 1; y < m; ++y)
            proj += Scalar(-n) * y * sin(pi * k * y / m);
        c[k] = 2 * proj / (m * mp::sinh(n * ge.beta[k]));
    }
    GridField f(n, m);
    for (long x = 1; x < n; ++x)
        for (long y = 1; y < m; ++y) {
            Scalar v = 0;
            for (long k = 1; k < m; ++k)
                v += c[k] * sin(pi * k * y / m) * mp::sinh(x * ge.beta[k]);
            f.at(x, y) = v;
        }
    for (long x = 0; x <= n; ++x) {
        f.at(x, 0) = 0;
        f.at(x, m) = 0;
    }
    for (long y = 1; y < m; ++y) {
        f.at(0, y) = 0;
        f.at(n, y) = Scalar(-n) * y;
    }
    return f;
}

}  // namespace atanforge
