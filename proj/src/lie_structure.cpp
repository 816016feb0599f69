#include "bchkit/lie_structure.hpp"

namespace bchkit {

Subspace derived_subalgebra(const StructureConstants& alg)
{
    std::vector<RationalVector> brackets;
    for (int a = 0; a < alg.dim(); ++a)
        for (int b = a + 1; b < alg.dim(); ++b) brackets.push_back(alg.ad(a).col(b));
    return Subspace::span(alg.dim(), brackets);
}

Subspace bracket_with_algebra(const StructureConstants& alg, const Subspace& v)
{
    std::vector<RationalVector> brackets;
    for (int a = 0; a < alg.dim(); ++a)
        for (const auto& w : v.basis()) brackets.push_back(alg.ad(a) * w);
    return Subspace::span(alg.dim(), brackets);
}

LowerCentralSeries lower_central_series(const StructureConstants& alg)
{
    LowerCentralSeries lcs;
    lcs.terms.push_back(derived_subalgebra(alg));
    // g_{n+1} is contained in g_n, so the dimension drops every step until the chain stops.
    while (true) {
        const Subspace& last = lcs.terms.back();
        if (last.is_zero()) {
            lcs.nilpotent = true;
            lcs.nilpotency_class = static_cast<int>(lcs.terms.size());
            return lcs;
        }
        Subspace next = bracket_with_algebra(alg, last);
        if (next == last) {
            lcs.terms.push_back(std::move(next));
            return lcs;
        }
        lcs.terms.push_back(std::move(next));
    }
}

Subspace span_closure(int dim, const std::vector<RationalVector>& seeds, const std::vector<RationalMatrix>& operators)
{
    std::vector<RationalVector> generators = seeds;
    Subspace s = Subspace::span(dim, generators);
    while (true) {
        for (const auto& op : operators)
            for (const auto& b : s.basis()) generators.push_back(op * b);
        Subspace grown = Subspace::span(dim, generators);
        if (grown.dim() == s.dim()) return s;
        s = std::move(grown);
        generators = s.basis();
    }
}

} // namespace bchkit
