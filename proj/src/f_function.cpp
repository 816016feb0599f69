#include "bchkit/f_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/expm1.hpp>
#include <boost/math/special_functions/fpclassify.hpp>

namespace bchkit {

BivariateSeries<Rational> f_series(int max_total_degree)
{
    if (max_total_degree < 0) throw Error("series degree must be non-negative");
    const int top = max_total_degree + 1;

    // g(t) = (1 - e^-t)/t = sum (-1)^k t^k/(k+1)!,  e^-t = sum (-1)^k t^k/k!
    std::vector<Rational> g(top + 1);
    std::vector<Rational> e(top + 1);
    Rational inv_factorial = 1; // 1/k!
    for (int k = 0; k <= top; ++k) {
        if (k > 0) inv_factorial /= k;
        const Rational sign = (k % 2 == 0) ? 1 : -1;
        e[k] = sign * inv_factorial;
        g[k] = sign * inv_factorial / (k + 1);
    }
    using Series = BivariateSeries<Rational>;
    const Series numerator = (Series::in_u(g, top) - Series::in_v(g, top)).divided_by_u_minus_v();
    const Series denominator = (Series::in_u(e, top) - Series::in_v(e, top)).divided_by_u_minus_v();
    return numerator.divided_by(denominator);
}

const BivariateSeries<Rational>& f_series_cached()
{
    static const BivariateSeries<Rational> table = f_series(kCachedSeriesDegree);
    return table;
}

namespace {

template <class Real>
const BivariateSeries<Real>& series_table()
{
    static const BivariateSeries<Real> table = [] {
        constexpr int degree = series_degree_for<Real>();
        const auto exact = degree <= kSeriesDegree          ? f_series(degree)
                           : degree <= kCachedSeriesDegree ? f_series_cached().truncated(degree)
                                                           : f_series(degree);
        return exact.template cast<Real>([](const Rational& q) { return to_real<Real>(q); });
    }();
    return table;
}

template <class Real>
Real expm1_(const Real& x)
{
    return boost::math::expm1(x);
}

} // namespace

namespace detail {

template <class Real>
Real f_series_branch(Real u, Real v)
{
    if (v < u) std::swap(u, v);
    return series_table<Real>().evaluate(u, v);
}

template <class Real>
Real f_on_axis(Real t)
{
    return -1 / expm1_(-t) - 1 / t;
}

template <class Real>
Real f_integral(Real u, Real v)
{
    using std::abs;
    using std::exp;
    using std::floor;
    if (v < u) std::swap(u, v);
    const Real m = (u + v) / 2;
    const Real a = abs(u - v) / 2;
    // sinh(a s)/sinh(a) rewritten so nothing overflows for large a.
    const Real rate = m - a;
    const Real denom = expm1_(Real(-2 * a));
    auto integrand = [&](const Real& s) {
        const Real ratio = a == 0 ? s : Real(expm1_(Real(-2 * a * s)) / denom);
        return exp(rate * (1 - s)) * ratio;
    };
    // Keep the exponent variation per panel small enough for a 20-point rule.
    const int panels = 1 + static_cast<int>(floor((abs(rate) + 2 * a) / 2));
    Real total = 0;
    for (int p = 0; p < panels; ++p) {
        const Real lo = Real(p) / panels;
        const Real hi = Real(p + 1) / panels;
        total += boost::math::quadrature::gauss<Real, 20>::integrate(integrand, lo, hi);
    }
    return total;
}

template <class Real>
Real f_closed_branch(Real u, Real v)
{
    using std::abs;
    using std::exp;
    using std::sinh;
    if (v < u) std::swap(u, v);
    if (u == 0) return f_on_axis(v);
    if (v == 0) return f_on_axis(u);
    if (abs(u - v) < kDiagonalBand) return f_integral(u, v);
    auto phi = [](const Real& t) { return Real(-expm1_(Real(-t)) / t); };
    const Real m = (u + v) / 2;
    const Real d = (u - v) / 2;
    // e^-u - e^-v without cancellation.
    const Real denom = -2 * exp(-m) * sinh(d);
    return (phi(u) - phi(v)) / denom;
}

} // namespace detail

template <class Real>
Real f_scalar(Real u, Real v)
{
    using std::abs;
    using std::log;
    if (!(boost::math::isfinite)(u) || !(boost::math::isfinite)(v)) throw Error("f(u,v) needs finite arguments");
    if (v < u) std::swap(u, v);
    static const Real exp_range = log(std::numeric_limits<Real>::max());
    if (abs(u) + abs(v) > exp_range) throw Overflow("f(u,v): |u| + |v| is beyond the exponential range");
    const Real r = std::max({abs(u), abs(v), abs(u - v)});
    if (r < Real(kSeriesCrossover)) return detail::f_series_branch(u, v);
    const Real f = detail::f_closed_branch(u, v);
    if (!(boost::math::isfinite)(f)) throw Overflow("f(u,v) overflowed");
    return f;
}

namespace f_forms {

template <class Real>
Real positive_exponentials(Real u, Real v)
{
    using std::exp;
    return ((u - v) * exp(u + v) - (u * exp(u) - v * exp(v))) / (u * v * (exp(u) - exp(v)));
}

template <class Real>
Real negative_exponentials(Real u, Real v)
{
    using std::exp;
    return ((u - v) - (u * exp(-v) - v * exp(-u))) / (u * v * (exp(-v) - exp(-u)));
}

template <class Real>
Real difference_quotient(Real u, Real v)
{
    using std::exp;
    return ((1 - exp(-u)) / u - (1 - exp(-v)) / v) / (exp(-u) - exp(-v));
}

} // namespace f_forms

#define BCHKIT_F_INSTANTIATE(Real)                                                                                    \
    template Real f_scalar<Real>(Real, Real);                                                                         \
    template Real f_forms::positive_exponentials<Real>(Real, Real);                                                   \
    template Real f_forms::negative_exponentials<Real>(Real, Real);                                                   \
    template Real f_forms::difference_quotient<Real>(Real, Real);                                                     \
    template Real detail::f_series_branch<Real>(Real, Real);                                                          \
    template Real detail::f_closed_branch<Real>(Real, Real);                                                          \
    template Real detail::f_integral<Real>(Real, Real);                                                               \
    template Real detail::f_on_axis<Real>(Real);

BCHKIT_F_INSTANTIATE(double)
BCHKIT_F_INSTANTIATE(HighPrecision)

} // namespace bchkit
