#include "atanforge/series.hpp"

namespace atanforge {

SeriesOutcome sum_with_tail(const std::function<Scalar(long)>& term,
                            const std::function<Scalar(long)>& tail_bound,
                            const PrecisionContext& ctx, long start) {
    SeriesOutcome out;
    out.value = 0;
    long n = start;
    for (; n - start < ctx.max_terms; ++n) {
        out.value += term(n);
        ++out.terms_used;
        out.tail_bound = tail_bound(n);
        if (out.tail_bound <= ctx.tail_target) return out;
    }
    out.converged = false;
    return out;
}

}  // namespace atanforge
