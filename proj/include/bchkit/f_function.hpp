#ifndef BCHKIT_F_FUNCTION_HPP
#define BCHKIT_F_FUNCTION_HPP

#include "bchkit/bivariate_series.hpp"
#include "bchkit/rational.hpp"

namespace bchkit {

// The symmetric function multiplying [X,Y] in ln(e^X e^Y) = X + Y + f(u,v)[X,Y]:
//
//   f(u,v) = ((1 - e^-u)/u - (1 - e^-v)/v) / (e^-u - e^-v),   f(0,0) = 1/2.
//
// Its singularities lie on u - v = 2 pi i k, k != 0, so the Taylor series about
// the origin converges on the polydisc max(|u|,|v|) < pi.

/// Below this value of max(|u|, |v|, |u - v|) f_scalar sums the Taylor series.
inline constexpr double kSeriesCrossover = 0.25;
/// Taylor degree used by the double-precision series branch.
inline constexpr int kSeriesDegree = 20;
/// Outside the crossover, |u - v| below this uses the integral representation.
inline constexpr double kDiagonalBand = 0.5;
/// Relative accuracy promised by f_scalar<double>.
inline constexpr double kFRelativeAccuracy = 1e-13;

/// Exact Taylor coefficients of f through total degree D.
///
/// Computed as [(g(u) - g(v))/(u - v)] / [(e^-u - e^-v)/(u - v)] with
/// g(t) = (1 - e^-t)/t; both divisions by (u - v) are exact.
BivariateSeries<Rational> f_series(int max_total_degree);

/// f_series at a fixed, generous degree, built once on first use.
const BivariateSeries<Rational>& f_series_cached();
inline constexpr int kCachedSeriesDegree = 72;

/// Taylor degree the series branch uses for a given floating type.
template <class Real>
constexpr int series_degree_for()
{
    constexpr int digits = std::numeric_limits<Real>::digits10;
    return digits <= 17 ? kSeriesDegree : (5 * digits + 3) / 4 + 4;
}

/// f(u, v), accurate through the removable singularities at u = 0, v = 0 and
/// u = v. Symmetric bit for bit. Throws Overflow when |u| + |v| exceeds the
/// exponential range of Real.
template <class Real>
Real f_scalar(Real u, Real v);

/// The three algebraically equivalent quotients, evaluated literally. Only
/// meaningful away from u = 0, v = 0 and u = v.
namespace f_forms {
template <class Real>
Real positive_exponentials(Real u, Real v); // ((u-v)e^{u+v} - (ue^u - ve^v)) / (uv(e^u - e^v))
template <class Real>
Real negative_exponentials(Real u, Real v); // ((u-v) - (ue^-v - ve^-u)) / (uv(e^-v - e^-u))
template <class Real>
Real difference_quotient(Real u, Real v); // ((1-e^-u)/u - (1-e^-v)/v) / (e^-u - e^-v)
} // namespace f_forms

namespace detail {
template <class Real>
Real f_series_branch(Real u, Real v);
/// Everything f_scalar does outside the series crossover.
template <class Real>
Real f_closed_branch(Real u, Real v);
/// Quadrature of f = int_0^1 e^{m(1-s)} sinh(ds)/sinh(d) ds, m = (u+v)/2, d = (u-v)/2.
template <class Real>
Real f_integral(Real u, Real v);
/// f(0, t) = 1/(1 - e^-t) - 1/t.
template <class Real>
Real f_on_axis(Real t);
} // namespace detail

#define BCHKIT_F_EXTERN(Real)                                                                                         \
    extern template Real f_scalar<Real>(Real, Real);                                                                  \
    extern template Real f_forms::positive_exponentials<Real>(Real, Real);                                            \
    extern template Real f_forms::negative_exponentials<Real>(Real, Real);                                            \
    extern template Real f_forms::difference_quotient<Real>(Real, Real);                                              \
    extern template Real detail::f_series_branch<Real>(Real, Real);                                                   \
    extern template Real detail::f_closed_branch<Real>(Real, Real);                                                   \
    extern template Real detail::f_integral<Real>(Real, Real);                                                        \
    extern template Real detail::f_on_axis<Real>(Real);

BCHKIT_F_EXTERN(double)
BCHKIT_F_EXTERN(HighPrecision)
#undef BCHKIT_F_EXTERN

} // namespace bchkit

#endif
