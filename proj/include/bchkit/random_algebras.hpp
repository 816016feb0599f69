#ifndef BCHKIT_RANDOM_ALGEBRAS_HPP
#define BCHKIT_RANDOM_ALGEBRAS_HPP

#include <cstdint>
#include <random>

#include "bchkit/case_detect.hpp"

namespace bchkit {

using Rng = std::mt19937_64;

/// Independent stream for instance `index` of a run seeded with `seed`.
Rng instance_rng(std::uint64_t seed, std::uint64_t index);

/// Uniform k/denominator with |k| <= max_numerator.
Rational random_rational(Rng& rng, int max_numerator, int denominator);

/// Integer coordinates k_i in [-8, 8], not all zero, divided by
/// 2 ceil(sqrt(sum k_i^2)); the Euclidean norm is at most 1/2.
RationalVector random_small_element(Rng& rng, int dim);

struct RandomRankOne {
    StructureConstants algebra;
    /// omega and n as generated, before any normalization.
    RationalMatrix omega;
    RationalVector n;
};

/// f_ab^c = omega_ab n^c in dimension dim >= 2.
///
/// nilpotent = false: omega = p ^ q / 8 with p, q in {-1,0,1}^dim and n
/// entries k/8, redrawn until omega n != 0. Decomposable omega makes Jacobi
/// hold for every n.
/// nilpotent = true (dim >= 3): n entries k/8 and omega = P A P for a random
/// antisymmetric A and the orthogonal projector P with P n = 0, so omega n = 0.
RandomRankOne random_rank_one(Rng& rng, int dim, bool nilpotent);

/// a semidirect V with a abelian of dimension k, acting on V (dimension m)
/// by commuting matrices A_i = r_i I + s_i M with ||A_i||_inf <= 1, a
/// coboundary cocycle [a_i, a_j] = A_i w_j - A_j w_i, and a change of basis
/// P = I + E with off-diagonal row sums of E at most 1/2.
/// [g,g] lies in V, which is abelian, so every pair satisfies the
/// centralizer condition.
StructureConstants random_abelian_derived(Rng& rng, int k, int m);

/// The algebra with basis b_a = sum_k p_ka e_k; p must be invertible.
StructureConstants change_basis(const StructureConstants& alg, const RationalMatrix& p);

} // namespace bchkit

#endif
