#ifndef BCHKIT_INTEGRAL_SERIES_HPP
#define BCHKIT_INTEGRAL_SERIES_HPP

#include "bchkit/structure_constants.hpp"

namespace bchkit {

/// Truncation degree for the BCH series: the number of X/Y letters in a
/// term, so [X,Y] has degree 2.
struct GradedTruncation {
    explicit GradedTruncation(int degree_) : degree(degree_)
    {
        if (degree < 2) throw Error("graded truncation degree must be at least 2");
    }
    int degree;
};

/// ln(e^X e^Y) through grading degree D from
///
///   X + Y + int_0^1 dt sum_{n>=1} (I - e^{L_X} e^{t L_Y})^{n-1} / (n(n+1))
///                                 (e^{L_X} - I)/L_X [X,Y]
///
/// with every exponential expanded as a polynomial, products truncated by
/// degree as they are formed, and the t-integral done term by term. Exact.
RationalVector bch_integral_series(const StructureConstants& alg, const RationalVector& x, const RationalVector& y,
                                   GradedTruncation truncation);

namespace detail {
/// Same computation with explicit cutoffs for the n-sum and for the
/// exponential expansions; the public entry point uses the proven minimal ones.
RationalVector bch_integral_series(const StructureConstants& alg, const RationalVector& x, const RationalVector& y,
                                   int degree, int max_n, int exp_order);
} // namespace detail

} // namespace bchkit

#endif
