#ifndef BCHKIT_STRUCTURE_CONSTANTS_HPP
#define BCHKIT_STRUCTURE_CONSTANTS_HPP

#include <span>
#include <string>
#include <vector>

#include "bchkit/errors.hpp"
#include "bchkit/rational.hpp"

namespace bchkit {

/// A finite-dimensional Lie algebra given by [T_a, T_b] = f_ab^c T_c.
///
/// Instances only come out of validate(), so every StructureConstants is
/// antisymmetric and satisfies the Jacobi identity. The tensor is stored as
/// the adjoint matrices of the basis vectors: ad(a)(c, b) = f_ab^c.
class StructureConstants {
public:
    struct Entry {
        int a;
        int b;
        int c;
        Rational value;
    };

    /// Either orientation of (a,b) may be supplied; the other is filled in.
    /// Throws IndexOutOfRange, AntisymmetryViolation or JacobiViolation.
    static StructureConstants validate(int dim, std::span<const Entry> entries,
                                       std::vector<std::string> basis_names = {});

    int dim() const { return static_cast<int>(ad_.size()); }
    const Rational& operator()(int a, int b, int c) const { return ad_[a](c, b); }

    const RationalMatrix& ad(int a) const { return ad_[a]; }
    const Matrix<double>& ad_double(int a) const { return ad_double_[a]; }

    const std::vector<std::string>& basis_names() const { return names_; }

    /// Nonzero entries with a < b, in lexicographic order.
    std::vector<Entry> entries() const;

    bool operator==(const StructureConstants& other) const;

private:
    StructureConstants() = default;

    std::vector<RationalMatrix> ad_;
    std::vector<Matrix<double>> ad_double_;
    std::vector<std::string> names_;
};

namespace detail {

template <class Scalar>
Matrix<Scalar> ad_as(const StructureConstants& alg, int a)
{
    if constexpr (std::is_same_v<Scalar, Rational>) {
        return alg.ad(a);
    } else if constexpr (std::is_same_v<Scalar, double>) {
        return alg.ad_double(a);
    } else {
        return to_real<Scalar>(alg.ad(a));
    }
}

inline void check_dim(const StructureConstants& alg, Eigen::Index size)
{
    if (size != alg.dim()) throw DimensionMismatch(alg.dim(), size);
}

} // namespace detail

/// Matrix of L_X: column b holds the coordinates of [X, T_b].
template <class Scalar>
Matrix<Scalar> adjoint(const StructureConstants& alg, const Vector<Scalar>& x)
{
    detail::check_dim(alg, x.size());
    Matrix<Scalar> m = Matrix<Scalar>::Zero(alg.dim(), alg.dim());
    for (int a = 0; a < alg.dim(); ++a)
        if (!is_zero(x[a])) m += x[a] * detail::ad_as<Scalar>(alg, a);
    return m;
}

template <class Scalar>
Vector<Scalar> bracket(const StructureConstants& alg, const Vector<Scalar>& x, const Vector<Scalar>& y)
{
    detail::check_dim(alg, y.size());
    return adjoint(alg, x) * y;
}

} // namespace bchkit

#endif
