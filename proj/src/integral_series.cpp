#include "bchkit/integral_series.hpp"

namespace bchkit {

namespace {

/// Vector-valued polynomial in t, graded by the number of adjoint factors:
/// part[k][p] is the coefficient of t^p among terms with k factors.
class GradedVector {
public:
    GradedVector(int max_grade, int dim)
        : part_(max_grade + 1, std::vector<RationalVector>(max_grade + 1, RationalVector::Zero(dim)))
    {
    }

    int max_grade() const { return static_cast<int>(part_.size()) - 1; }
    RationalVector& at(int grade, int tpow) { return part_[grade][tpow]; }
    const RationalVector& at(int grade, int tpow) const { return part_[grade][tpow]; }

    GradedVector& operator-=(const GradedVector& o)
    {
        for (int k = 0; k <= max_grade(); ++k)
            for (int p = 0; p <= k; ++p) part_[k][p] -= o.part_[k][p];
        return *this;
    }

    bool empty_at(int grade, int tpow) const { return all_zero(part_[grade][tpow]); }

private:
    std::vector<std::vector<RationalVector>> part_;
};

Rational factorial(int n)
{
    Rational f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// e^{s L} v truncated at max_grade, adding one grade (and, if with_t, one
/// power of t) per factor of L. Terms beyond exp_order factors are dropped.
GradedVector apply_exponential(const GradedVector& v, const RationalMatrix& l, bool with_t, int exp_order)
{
    const int top = v.max_grade();
    GradedVector out(top, static_cast<int>(l.rows()));
    for (int k = 0; k <= top; ++k)
        for (int p = 0; p <= k; ++p) {
            if (v.empty_at(k, p)) continue;
            RationalVector term = v.at(k, p);
            for (int j = 0; k + j <= top && j <= exp_order; ++j) {
                if (j > 0) {
                    term = l * term;
                    term /= Rational(j);
                    if (all_zero(term)) break;
                }
                out.at(k + j, with_t ? p + j : p) += term;
            }
        }
    return out;
}

} // namespace

namespace detail {

RationalVector bch_integral_series(const StructureConstants& alg, const RationalVector& x, const RationalVector& y,
                                   int degree, int max_n, int exp_order)
{
    check_dim(alg, x.size());
    check_dim(alg, y.size());
    const int dim = alg.dim();
    const int top = degree - 2; // adjoint factors allowed on top of [X,Y]
    const RationalMatrix lx = adjoint(alg, x);
    const RationalMatrix ly = adjoint(alg, y);

    // (e^{L_X} - I)/L_X [X,Y] = sum_k L_X^k [X,Y]/(k+1)!
    GradedVector term(top, dim);
    {
        RationalVector t = bracket(alg, x, y);
        for (int k = 0; k <= top && k <= exp_order; ++k) {
            if (k > 0) t = lx * t;
            term.at(k, 0) = t / factorial(k + 1);
        }
    }

    GradedVector sum(top, dim);
    for (int n = 1; n <= max_n; ++n) {
        const Rational weight = Rational(1, n * (n + 1));
        for (int k = 0; k <= top; ++k)
            for (int p = 0; p <= k; ++p)
                if (!term.empty_at(k, p)) sum.at(k, p) += weight * term.at(k, p);
        // term <- (I - e^{L_X} e^{t L_Y}) term
        GradedVector shifted = apply_exponential(apply_exponential(term, ly, true, exp_order), lx, false, exp_order);
        term -= shifted;
    }

    RationalVector z = x + y;
    for (int k = 0; k <= top; ++k)
        for (int p = 0; p <= k; ++p)
            if (!sum.empty_at(k, p)) z += sum.at(k, p) / Rational(p + 1);
    return z;
}

} // namespace detail

RationalVector bch_integral_series(const StructureConstants& alg, const RationalVector& x, const RationalVector& y,
                                   GradedTruncation truncation)
{
    const int top = truncation.degree - 2;
    // I - e^{L_X}e^{tL_Y} raises the grade by at least one, so n - 1 <= top.
    return detail::bch_integral_series(alg, x, y, truncation.degree, top + 1, top);
}

} // namespace bchkit
