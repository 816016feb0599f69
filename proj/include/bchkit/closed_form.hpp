#ifndef BCHKIT_CLOSED_FORM_HPP
#define BCHKIT_CLOSED_FORM_HPP

#include <optional>
#include <string>

#include "bchkit/case_detect.hpp"
#include "bchkit/f_function.hpp"

namespace bchkit {

enum class BchMethod { Sum, Central, ScalarF, OperatorF };

std::string to_string(BchMethod method);

template <class Real = double>
struct BchResult {
    Vector<Real> z;
    BchMethod method = BchMethod::Sum;
    /// True when z_exact holds the exact rational answer.
    bool exact = false;
    std::optional<RationalVector> z_exact;
    /// Eigenvalue data for ScalarF.
    std::optional<Rational> u;
    std::optional<Rational> v;
    /// Highest total degree of L_X^i L_Y^j kept by OperatorF.
    int truncation_degree = 0;
    /// Absolute bound on the coordinate error (max norm); absent when exact.
    std::optional<double> residual_bound;
};

struct BchOptions {
    /// Target for the operator-series tail bound.
    double tolerance = 1e-13;
    /// Largest total degree the operator series may use.
    int max_degree = kCachedSeriesDegree;
    /// Mutation hook for conformance testing: uses 1/11 in place of the
    /// first-order coefficient 1/12 of f. Never set outside tests.
    bool perturb_first_order = false;
};

/// z = x + y (Commuting) or x + y + [x,y]/2 (CentralBracket), exact.
template <class Real = double>
BchResult<Real> bch_special(const StructureConstants& alg, const RationalVector& x, const RationalVector& y,
                            CaseTag tag);

/// z = x + y + f(u, v)[x,y] given L_X[x,y] = v[x,y] and L_Y[x,y] = -u[x,y].
template <class Real = double>
BchResult<Real> bch_eigenpair(const StructureConstants& alg, const RationalVector& x, const RationalVector& y,
                              const Rational& u, const Rational& v, const BchOptions& opts = {});

/// z = x + y + f(x.omega n, -y.omega n) (omega_ab x^a y^b) n for rank-one algebras.
template <class Real = double>
BchResult<Real> bch_rank_one(const RankOneFactorization& fact, const RationalVector& x, const RationalVector& y,
                             const BchOptions& opts = {});

/// Coordinates of ln(e^X e^Y) in a rank-one algebra; accepts floating inputs.
template <class Real = double>
Vector<Real> oplus(const RankOneFactorization& fact, const Vector<Real>& x, const Vector<Real>& y);

/// z = x + y + f(L_X, -L_Y)[x,y] on the closure S, where L_X and L_Y commute.
///
/// If both adjoints are nilpotent on S the series terminates and the result is
/// exact. Otherwise the degree grows until a geometric tail bound drops below
/// opts.tolerance; throws NonConvergence when the adjoints' max-row-sum norm on
/// S reaches pi or the bound cannot be met by opts.max_degree.
template <class Real = double>
BchResult<Real> bch_operator(const StructureConstants& alg, const RationalVector& x, const RationalVector& y,
                             const Subspace& S, const BchOptions& opts = {});

/// Classify and dispatch to the strongest applicable closed form.
/// Throws NoClosedForm when no case applies.
template <class Real = double>
BchResult<Real> bch_closed_form(const StructureConstants& alg, const CaseClassification& cls, const RationalVector& x,
                                const RationalVector& y, const BchOptions& opts = {});
template <class Real = double>
BchResult<Real> bch_closed_form(const StructureConstants& alg, const RationalVector& x, const RationalVector& y,
                                const BchOptions& opts = {});

/// f_ab^c = m_[a delta_b]^c with unit-weight antisymmetrization, so that
/// [X,Y] = ((x.m) Y - (y.m) X)/2.
StructureConstants case1_build(const RationalVector& m);

/// With X = Xh + alpha I and Y = Yh + beta I for a central I:
/// [Xh, Yh] = u Xh + v Yh + c I.
struct ShiftedCommutator {
    Rational u;
    Rational v;
    Rational c;
};

ShiftedCommutator case1_identify(const RationalVector& m, const Rational& alpha, const Rational& beta,
                                 const RationalVector& x, const RationalVector& y);

#define BCHKIT_CLOSED_FORM_EXTERN(Real)                                                                               \
    extern template BchResult<Real> bch_special<Real>(const StructureConstants&, const RationalVector&,                \
                                                      const RationalVector&, CaseTag);                                \
    extern template BchResult<Real> bch_eigenpair<Real>(const StructureConstants&, const RationalVector&,              \
                                                        const RationalVector&, const Rational&, const Rational&,      \
                                                        const BchOptions&);                                           \
    extern template BchResult<Real> bch_rank_one<Real>(const RankOneFactorization&, const RationalVector&,            \
                                                       const RationalVector&, const BchOptions&);                     \
    extern template Vector<Real> oplus<Real>(const RankOneFactorization&, const Vector<Real>&, const Vector<Real>&);  \
    extern template BchResult<Real> bch_operator<Real>(const StructureConstants&, const RationalVector&,               \
                                                       const RationalVector&, const Subspace&, const BchOptions&);    \
    extern template BchResult<Real> bch_closed_form<Real>(const StructureConstants&, const CaseClassification&,       \
                                                          const RationalVector&, const RationalVector&,               \
                                                          const BchOptions&);                                         \
    extern template BchResult<Real> bch_closed_form<Real>(const StructureConstants&, const RationalVector&,           \
                                                          const RationalVector&, const BchOptions&);

BCHKIT_CLOSED_FORM_EXTERN(double)
BCHKIT_CLOSED_FORM_EXTERN(HighPrecision)
#undef BCHKIT_CLOSED_FORM_EXTERN

} // namespace bchkit

#endif
