#ifndef BCHKIT_CASE_DETECT_HPP
#define BCHKIT_CASE_DETECT_HPP

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "bchkit/lie_structure.hpp"

namespace bchkit {

/// f_ab^c = omega_ab n^c, with the first nonzero coordinate of n equal to 1.
struct RankOneFactorization {
    RationalMatrix omega;
    RationalVector n;

    /// (omega n)_a = omega_ab n^b.
    RationalVector omega_n() const { return omega * n; }
    /// omega_ab x^a y^b.
    Rational pairing(const RationalVector& x, const RationalVector& y) const { return x.dot(omega * y); }
};

struct NotRankOne {
    int derived_dim;
};

std::variant<RankOneFactorization, NotRankOne> factorize_rank_one(const StructureConstants& alg);

/// u = -y^a omega_ab n^b, v = x^a omega_ab n^b.
template <class Scalar>
std::pair<Scalar, Scalar> uv_from_rank_one(const RankOneFactorization& fact, const Vector<Scalar>& x,
                                           const Vector<Scalar>& y)
{
    if (x.size() != fact.n.size()) throw DimensionMismatch(fact.n.size(), x.size());
    if (y.size() != fact.n.size()) throw DimensionMismatch(fact.n.size(), y.size());
    Vector<Scalar> on;
    if constexpr (std::is_same_v<Scalar, Rational>) {
        on = fact.omega_n();
    } else {
        on = to_real<Scalar>(fact.omega_n());
    }
    return {-y.dot(on), x.dot(on)};
}

/// [[g,g],[g,g]] = 0 via the contraction f_ab^m f_cd^n f_mn^e.
bool is_derived_abelian(const StructureConstants& alg);
/// Same predicate via pairwise brackets of a basis of [g,g].
bool is_derived_abelian_pairwise(const StructureConstants& alg);

/// [[X,Y],[g,g]] = 0.
bool pair_center_condition(const StructureConstants& alg, const RationalVector& x, const RationalVector& y);

struct CentralizerCheck {
    bool holds;
    /// Closure of {[X,Y]} under L_X and L_Y.
    Subspace S;
};

/// [[X,Y], S] = 0 with S = span{L_X^m L_Y^n [X,Y]}.
CentralizerCheck pair_centralizer_condition(const StructureConstants& alg, const RationalVector& x,
                                            const RationalVector& y);

/// Eigenvalues (u, v) with L_X w = v w and L_Y w = -u w for w = [X,Y] != 0.
/// Exact for rational input; floating input uses a relative residual test.
template <class Scalar>
std::optional<std::pair<Scalar, Scalar>> simultaneous_eigenvalues(const StructureConstants& alg,
                                                                  const Vector<Scalar>& x, const Vector<Scalar>& y);

enum class CaseTag { Commuting, CentralBracket, SimultaneousEigenvector, OperatorCommuting, NoClosedForm };

std::string to_string(CaseTag tag);

struct AlgebraFacts {
    int derived_dim = 0;
    bool derived_abelian = false;
    LowerCentralSeries lower_central;
    std::optional<RankOneFactorization> rank_one;
};

AlgebraFacts algebra_facts(const StructureConstants& alg);

struct CaseClassification {
    CaseTag tag;
    /// Set for SimultaneousEigenvector (and CentralBracket, where both are 0).
    std::optional<Rational> u;
    std::optional<Rational> v;
    /// Set once the centralizer detector has run (OperatorCommuting, NoClosedForm).
    std::optional<Subspace> S;
    AlgebraFacts facts;
};

CaseClassification classify_pair(const StructureConstants& alg, const RationalVector& x, const RationalVector& y);
CaseClassification classify_pair(const StructureConstants& alg, const AlgebraFacts& facts, const RationalVector& x,
                                 const RationalVector& y);

// ---------------------------------------------------------------------------

template <class Scalar>
std::optional<std::pair<Scalar, Scalar>> simultaneous_eigenvalues(const StructureConstants& alg,
                                                                  const Vector<Scalar>& x, const Vector<Scalar>& y)
{
    const Vector<Scalar> w = bracket(alg, x, y);
    Eigen::Index lead = 0;
    if constexpr (std::is_same_v<Scalar, Rational>) {
        while (lead < w.size() && is_zero(w[lead])) ++lead;
        if (lead == w.size()) return std::nullopt;
    } else {
        if (w.squaredNorm() == 0) return std::nullopt;
        w.cwiseAbs().maxCoeff(&lead);
    }
    const Vector<Scalar> lx = bracket(alg, x, w);
    const Vector<Scalar> ly = bracket(alg, y, w);
    const Scalar v = lx[lead] / w[lead];
    const Scalar minus_u = ly[lead] / w[lead];
    const Vector<Scalar> rx = lx - v * w;
    const Vector<Scalar> ry = ly - minus_u * w;
    if constexpr (std::is_same_v<Scalar, Rational>) {
        if (!all_zero(rx) || !all_zero(ry)) return std::nullopt;
    } else {
        using std::abs;
        const Scalar scale = w.norm() * (Scalar(1) + abs(v) + abs(minus_u));
        if (rx.norm() > Scalar(1e-12) * scale || ry.norm() > Scalar(1e-12) * scale) return std::nullopt;
    }
    return std::pair<Scalar, Scalar>{-minus_u, v};
}

} // namespace bchkit

#endif
