#ifndef BCHKIT_LIE_STRUCTURE_HPP
#define BCHKIT_LIE_STRUCTURE_HPP

#include <vector>

#include "bchkit/structure_constants.hpp"
#include "bchkit/subspace.hpp"

namespace bchkit {

/// [g, g]: the span of all brackets of basis vectors.
Subspace derived_subalgebra(const StructureConstants& alg);

/// [g, V] for a subspace V.
Subspace bracket_with_algebra(const StructureConstants& alg, const Subspace& v);

struct LowerCentralSeries {
    /// g_1 = [g,g], g_2 = [g,g_1], ... up to the first zero term (nilpotent)
    /// or the first repeated term (not nilpotent).
    std::vector<Subspace> terms;
    bool nilpotent = false;
    /// The n with g_n = 0; 0 when not nilpotent.
    int nilpotency_class = 0;

    const Subspace& stable() const { return terms.back(); }
};

LowerCentralSeries lower_central_series(const StructureConstants& alg);

/// Smallest subspace containing the seeds and invariant under every operator.
Subspace span_closure(int dim, const std::vector<RationalVector>& seeds, const std::vector<RationalMatrix>& operators);

} // namespace bchkit

#endif
