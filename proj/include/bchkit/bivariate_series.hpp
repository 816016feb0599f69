#ifndef BCHKIT_BIVARIATE_SERIES_HPP
#define BCHKIT_BIVARIATE_SERIES_HPP

#include <span>
#include <vector>

#include "bchkit/errors.hpp"
#include "bchkit/rational.hpp"

namespace bchkit {

/// Truncated power series sum_{i+j<=D} c_ij u^i v^j.
///
/// Products and quotients are truncated at the smaller of the two operand
/// degrees, so every stored coefficient is correct.
template <class Scalar>
class BivariateSeries {
public:
    explicit BivariateSeries(int max_degree)
        : degree_(max_degree), c_(static_cast<std::size_t>(max_degree + 1) * (max_degree + 2) / 2, Scalar(0))
    {
    }

    /// sum_k c_k u^k (or v^k).
    static BivariateSeries in_u(std::span<const Scalar> coeffs, int max_degree)
    {
        BivariateSeries s(max_degree);
        for (int k = 0; k <= max_degree && k < static_cast<int>(coeffs.size()); ++k) s.coeff(k, 0) = coeffs[k];
        return s;
    }
    static BivariateSeries in_v(std::span<const Scalar> coeffs, int max_degree)
    {
        BivariateSeries s(max_degree);
        for (int k = 0; k <= max_degree && k < static_cast<int>(coeffs.size()); ++k) s.coeff(0, k) = coeffs[k];
        return s;
    }

    int max_degree() const { return degree_; }

    Scalar& coeff(int i, int j) { return c_[index(i, j)]; }
    const Scalar& coeff(int i, int j) const { return c_[index(i, j)]; }

    BivariateSeries truncated(int max_degree) const
    {
        BivariateSeries s(std::min(max_degree, degree_));
        for (int d = 0; d <= s.degree_; ++d)
            for (int j = 0; j <= d; ++j) s.coeff(d - j, j) = coeff(d - j, j);
        return s;
    }

    friend BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b)
    {
        return combine(a, b, Scalar(1));
    }
    friend BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b)
    {
        return combine(a, b, Scalar(-1));
    }

    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b)
    {
        BivariateSeries out(std::min(a.degree_, b.degree_));
        const int top = out.degree_;
        for (int da = 0; da <= top; ++da)
            for (int ja = 0; ja <= da; ++ja) {
                const Scalar& ca = a.coeff(da - ja, ja);
                if (ca == 0) continue;
                for (int db = 0; da + db <= top; ++db)
                    for (int jb = 0; jb <= db; ++jb) out.coeff(da - ja + db - jb, ja + jb) += ca * b.coeff(db - jb, jb);
            }
        return out;
    }

    /// Quotient of two series; the divisor must have a nonzero constant term.
    BivariateSeries divided_by(const BivariateSeries& divisor) const
    {
        const Scalar& lead = divisor.coeff(0, 0);
        if (lead == 0) throw Error("series division by a series with zero constant term");
        BivariateSeries q(std::min(degree_, divisor.degree_));
        for (int d = 0; d <= q.degree_; ++d)
            for (int j = 0; j <= d; ++j) {
                const int i = d - j;
                Scalar acc = coeff(i, j);
                for (int k = 0; k <= i; ++k)
                    for (int l = 0; l <= j; ++l) {
                        if (k == 0 && l == 0) continue;
                        const Scalar& b = divisor.coeff(k, l);
                        if (b != 0) acc -= b * q.coeff(i - k, j - l);
                    }
                q.coeff(i, j) = acc / lead;
            }
        return q;
    }

    /// Exact quotient by (u - v); loses one degree. Throws if the series does
    /// not vanish on the diagonal through its stored degree.
    BivariateSeries divided_by_u_minus_v() const
    {
        if (degree_ < 1) throw Error("need degree >= 1 to divide by (u - v)");
        BivariateSeries q(degree_ - 1);
        if (coeff(0, 0) != 0) throw Error("series is not divisible by (u - v)");
        // p_{i,j} = q_{i-1,j} - q_{i,j-1}, solved along each total degree d+1.
        for (int d = 0; d <= q.degree_; ++d) {
            q.coeff(0, d) = -coeff(0, d + 1);
            for (int i = 1; i <= d; ++i) q.coeff(i, d - i) = q.coeff(i - 1, d - i + 1) - coeff(i, d - i + 1);
            if (q.coeff(d, 0) != coeff(d + 1, 0)) throw Error("series is not divisible by (u - v)");
        }
        return q;
    }

    template <class Real>
    Real evaluate(const Real& u, const Real& v) const
    {
        std::vector<Real> vp(degree_ + 1);
        vp[0] = Real(1);
        for (int j = 1; j <= degree_; ++j) vp[j] = vp[j - 1] * v;
        // Horner in u over the columns of fixed v-power.
        Real total = Real(0);
        for (int j = degree_; j >= 0; --j) {
            Real col = Real(0);
            for (int i = degree_ - j; i >= 0; --i) col = col * u + static_cast<Real>(coeff(i, j));
            total += col * vp[j];
        }
        return total;
    }

    template <class Other, class Convert>
    BivariateSeries<Other> cast(Convert convert) const
    {
        BivariateSeries<Other> out(degree_);
        for (int d = 0; d <= degree_; ++d)
            for (int j = 0; j <= d; ++j) out.coeff(d - j, j) = convert(coeff(d - j, j));
        return out;
    }

    bool operator==(const BivariateSeries& other) const { return degree_ == other.degree_ && c_ == other.c_; }

private:
    static std::size_t index(int i, int j)
    {
        const int d = i + j;
        return static_cast<std::size_t>(d) * (d + 1) / 2 + j;
    }

    static BivariateSeries combine(const BivariateSeries& a, const BivariateSeries& b, const Scalar& sign)
    {
        BivariateSeries out(std::min(a.degree_, b.degree_));
        for (int d = 0; d <= out.degree_; ++d)
            for (int j = 0; j <= d; ++j) out.coeff(d - j, j) = a.coeff(d - j, j) + sign * b.coeff(d - j, j);
        return out;
    }

    int degree_;
    std::vector<Scalar> c_;
};

} // namespace bchkit

#endif
