#pragma once

#include <vector>

#include "atanforge/report.hpp"
#include "atanforge/scalar.hpp"

namespace atanforge {

/// Rectangular grid 0..n x 0..m with the one-parameter anisotropy a.
/// a = 1 is the base case; the associated Laplacian weight is lambda = 1/a^2.
struct GridSpec {
    long n = 2, m = 2;
    Scalar aniso_alpha = Scalar(1);

    void validate() const {
        if (n < 2 || m < 2) throw std::domain_error("GridSpec: n,m must be >= 2");
        if (aniso_alpha <= 0) throw std::domain_error("GridSpec: aniso_alpha must be > 0");
    }
    Scalar lambda() const { return 1 / (aniso_alpha * aniso_alpha); }
};

/// (n+1) x (m+1) matrix of values; cells with x in {0,n} or y in {0,m} are
/// boundary.
struct GridField {
    long n = 0, m = 0;
    std::vector<Scalar> values;

    GridField() = default;
    GridField(long n_, long m_) : n(n_), m(m_), values((n_ + 1) * (m_ + 1), Scalar(0)) {}
    Scalar& at(long x, long y) { return values[x * (m + 1) + y]; }
    const Scalar& at(long x, long y) const { return values[x * (m + 1) + y]; }
    bool is_boundary(long x, long y) const { return x == 0 || x == n || y == 0 || y == m; }
};

struct GridExponents {
    std::vector<Scalar> alpha;  // index 0..n
    std::vector<Scalar> beta;   // index 0..m
};

/// Generalized recipe: alpha_j = 2 asinh(a sin(pi j/2n)),
/// beta_k = 2 asinh((1/a) sin(pi k/2m)). Coincides with the base
/// cosh alpha_j = 2 - cos(pi j/n) recipe at a = 1.
GridExponents grid_exponents(const GridSpec& spec);

/// Base-case recipe through acosh_solve; used to cross-check the a = 1
/// equivalence.
GridExponents grid_exponents_base(const GridSpec& spec);

/// The two-sum reciprocal identity against -x*y at one grid point.
IdentityReport dirichlet_identity_residual(const GridSpec& spec, long x, long y,
                                           const PrecisionContext& ctx);

struct ClosedFormResult {
    Scalar sum;
    Scalar expected;     // -x^2/(2n), the value the sum matches
    Scalar printed_value;  // -x^2/n as printed
    bool matches_expected = false;
    bool matches_printed = false;
};

/// Single-sum closed form at n = m, x = y; evaluates both candidate right
/// sides and records which one the sum matches.
ClosedFormResult closed_form_sum(long n, long x, const PrecisionContext& ctx);

/// Five-point (possibly anisotropic) Laplacian at an interior point.
Scalar discrete_laplacian(const GridField& f, long x, long y, const Scalar& lambda);

/// Dense solve of the interior Laplace system at working precision, given
/// populated boundary cells. The oracle for the eigen expansions.
GridField solve_dirichlet_direct(const GridSpec& spec, const GridField& boundary);

/// Sine-series solutions of the two split boundary problems. f1 carries the
/// y = m row data -x*m, f2 the x = n column data -n*y; their sum is -x*y on
/// the whole grid. Horizontal rows take precedence at corners, which is the
/// assignment that makes the decomposition close at (n,m).
GridField eigen_solution_f1(const GridSpec& spec);
GridField eigen_solution_f2(const GridSpec& spec);

/// Fitted sine coefficients of f1 (index 1..n-1); reproduces the
/// m (-1)^j cot(pi j/2n)/sinh(m alpha_j) weights of the identity.
std::vector<Scalar> f1_sine_coefficients(const GridSpec& spec);

}  // namespace atanforge
