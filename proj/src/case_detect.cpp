#include "bchkit/case_detect.hpp"

namespace bchkit {

std::variant<RankOneFactorization, NotRankOne> factorize_rank_one(const StructureConstants& alg)
{
    const Subspace derived = derived_subalgebra(alg);
    if (derived.dim() != 1) return NotRankOne{derived.dim()};

    // The echelon basis vector already has its first nonzero coordinate equal to 1.
    RankOneFactorization fact{RationalMatrix::Zero(alg.dim(), alg.dim()), derived.basis_vector(0)};
    const int pivot = derived.pivots()[0];
    for (int a = 0; a < alg.dim(); ++a)
        for (int b = 0; b < alg.dim(); ++b) fact.omega(a, b) = alg(a, b, pivot);
    return fact;
}

bool is_derived_abelian(const StructureConstants& alg)
{
    const int d = alg.dim();
    // brackets[a*d + b] = [T_a, T_b] = f_ab^m T_m
    std::vector<RationalVector> brackets;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) brackets.push_back(alg.ad(a).col(b));

    for (int ab = 0; ab < d * d; ++ab) {
        if (all_zero(brackets[ab])) continue;
        for (int cd = ab + 1; cd < d * d; ++cd) {
            if (all_zero(brackets[cd])) continue;
            for (int e = 0; e < d; ++e) {
                Rational sum = 0;
                for (int m = 0; m < d; ++m) {
                    if (is_zero(brackets[ab][m])) continue;
                    for (int n = 0; n < d; ++n)
                        if (!is_zero(brackets[cd][n])) sum += brackets[ab][m] * brackets[cd][n] * alg(m, n, e);
                }
                if (!is_zero(sum)) return false;
            }
        }
    }
    return true;
}

bool is_derived_abelian_pairwise(const StructureConstants& alg)
{
    const Subspace derived = derived_subalgebra(alg);
    for (int i = 0; i < derived.dim(); ++i)
        for (int j = i + 1; j < derived.dim(); ++j)
            if (!all_zero(bracket(alg, derived.basis_vector(i), derived.basis_vector(j)))) return false;
    return true;
}

bool pair_center_condition(const StructureConstants& alg, const RationalVector& x, const RationalVector& y)
{
    const RationalMatrix ad_w = adjoint(alg, bracket(alg, x, y));
    const Subspace derived = derived_subalgebra(alg);
    for (const auto& b : derived.basis())
        if (!all_zero(RationalVector(ad_w * b))) return false;
    return true;
}

CentralizerCheck pair_centralizer_condition(const StructureConstants& alg, const RationalVector& x,
                                            const RationalVector& y)
{
    const RationalVector w = bracket(alg, x, y);
    Subspace s = span_closure(alg.dim(), {w}, {adjoint(alg, x), adjoint(alg, y)});
    const RationalMatrix ad_w = adjoint(alg, w);
    bool holds = true;
    for (const auto& b : s.basis())
        if (!all_zero(RationalVector(ad_w * b))) {
            holds = false;
            break;
        }
    return {holds, std::move(s)};
}

std::string to_string(CaseTag tag)
{
    switch (tag) {
    case CaseTag::Commuting: return "Commuting";
    case CaseTag::CentralBracket: return "CentralBracket";
    case CaseTag::SimultaneousEigenvector: return "SimultaneousEigenvector";
    case CaseTag::OperatorCommuting: return "OperatorCommuting";
    case CaseTag::NoClosedForm: return "NoClosedForm";
    }
    return "?";
}

AlgebraFacts algebra_facts(const StructureConstants& alg)
{
    AlgebraFacts facts;
    facts.lower_central = lower_central_series(alg);
    facts.derived_dim = facts.lower_central.terms.front().dim();
    facts.derived_abelian = is_derived_abelian(alg);
    if (auto r = factorize_rank_one(alg); std::holds_alternative<RankOneFactorization>(r))
        facts.rank_one = std::get<RankOneFactorization>(std::move(r));
    return facts;
}

CaseClassification classify_pair(const StructureConstants& alg, const RationalVector& x, const RationalVector& y)
{
    return classify_pair(alg, algebra_facts(alg), x, y);
}

CaseClassification classify_pair(const StructureConstants& alg, const AlgebraFacts& facts, const RationalVector& x,
                                 const RationalVector& y)
{
    CaseClassification out{CaseTag::NoClosedForm, std::nullopt, std::nullopt, std::nullopt, facts};
    const RationalVector w = bracket(alg, x, y);
    if (all_zero(w)) {
        out.tag = CaseTag::Commuting;
        return out;
    }
    if (all_zero(adjoint(alg, w))) {
        out.tag = CaseTag::CentralBracket;
        out.u = Rational(0);
        out.v = Rational(0);
        return out;
    }
    if (auto uv = simultaneous_eigenvalues(alg, x, y)) {
        out.tag = CaseTag::SimultaneousEigenvector;
        out.u = uv->first;
        out.v = uv->second;
        return out;
    }
    CentralizerCheck check = pair_centralizer_condition(alg, x, y);
    out.tag = check.holds ? CaseTag::OperatorCommuting : CaseTag::NoClosedForm;
    out.S = std::move(check.S);
    return out;
}

} // namespace bchkit
