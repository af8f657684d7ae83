#pragma once

#include <functional>

#include "atanforge/scalar.hpp"

namespace atanforge {

/// Truncated series value with a certified bound on the omitted tail.
struct SeriesOutcome {
    Scalar value;
    long terms_used = 0;
    Scalar tail_bound;
    bool converged = true;
};

/// Sums term(start), term(start+1), ... in increasing index order at working
/// precision until tail_bound(N) <= ctx.tail_target or ctx.max_terms terms
/// have been added. tail_bound(N) must be a valid upper bound on the
/// remainder after the term of index N; each series caller documents its own.
/// Terms are requested with consecutive increasing indices, so term() may
/// carry incremental state.
SeriesOutcome sum_with_tail(const std::function<Scalar(long)>& term,
                            const std::function<Scalar(long)>& tail_bound,
                            const PrecisionContext& ctx, long start = 0);

}  // namespace atanforge
