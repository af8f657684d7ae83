#pragma once

#include <functional>

#include "atanforge/scalar.hpp"

namespace atanforge {

struct QuadratureResult {
    Scalar value;
    Scalar error_estimate;
    bool converged = false;
    long evaluations = 0;
};

/// Tanh-sinh quadrature over a finite interval. Doubles the node density
/// until successive levels agree to `tol`; fine for the smooth integrands
/// used here (elliptic K oracle, the sinh-kernel integral).
QuadratureResult integrate_tanh_sinh(const std::function<Scalar(const Scalar&)>& f,
                                     const Scalar& a, const Scalar& b,
                                     const Scalar& tol, int max_levels = 14);

}  // namespace atanforge
