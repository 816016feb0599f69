#ifndef BCHKIT_RATIONAL_HPP
#define BCHKIT_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace bchkit {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator. Expression templates are off so the type composes with Eigen.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// 50 significant digits; used where double rounding would hide the quantity
/// being measured (convergence-order checks).
using HighPrecision = boost::multiprecision::cpp_bin_float_50;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalVector = Vector<Rational>;
using RationalMatrix = Matrix<Rational>;

/// Parses "p/q", "-p/q" or an integer string. Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

template <class Real>
Real to_real(const Rational& q)
{
    if constexpr (std::is_same_v<Real, double>) {
        return q.convert_to<double>();
    } else {
        return static_cast<Real>(q);
    }
}

template <class Real>
Vector<Real> to_real(const RationalVector& v)
{
    Vector<Real> out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = to_real<Real>(v[i]);
    return out;
}

template <class Real>
Matrix<Real> to_real(const RationalMatrix& m)
{
    Matrix<Real> out(m.rows(), m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, j) = to_real<Real>(m(i, j));
    return out;
}

template <class Scalar>
bool is_zero(const Scalar& x)
{
    return x == 0;
}

/// Exact zero test; Eigen's isZero() is tolerance based.
template <class Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& m)
{
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (!is_zero(m(i, j))) return false;
    return true;
}

template <class DerivedA, class DerivedB>
bool exactly_equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

RationalVector unit_vector(int dim, int index);

} // namespace bchkit

#endif
