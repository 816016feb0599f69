#include "bchkit/random_algebras.hpp"

#include <cmath>

namespace bchkit {

Rng instance_rng(std::uint64_t seed, std::uint64_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

Rational random_rational(Rng& rng, int max_numerator, int denominator)
{
    std::uniform_int_distribution<int> k(-max_numerator, max_numerator);
    return Rational(k(rng), denominator);
}

RationalVector random_small_element(Rng& rng, int dim)
{
    std::uniform_int_distribution<int> k(-8, 8);
    std::vector<int> ks(dim);
    long long sq = 0;
    do {
        sq = 0;
        for (auto& v : ks) {
            v = k(rng);
            sq += static_cast<long long>(v) * v;
        }
    } while (sq == 0);
    long long root = static_cast<long long>(std::sqrt(static_cast<double>(sq)));
    while (root * root < sq) ++root;
    while (root > 1 && (root - 1) * (root - 1) >= sq) --root;
    RationalVector x(dim);
    for (int i = 0; i < dim; ++i) x[i] = Rational(ks[i], 2 * root);
    return x;
}

namespace {

StructureConstants from_omega_n(const RationalMatrix& omega, const RationalVector& n)
{
    const int dim = static_cast<int>(n.size());
    std::vector<StructureConstants::Entry> entries;
    for (int a = 0; a < dim; ++a)
        for (int b = a + 1; b < dim; ++b)
            for (int c = 0; c < dim; ++c) {
                const Rational v = omega(a, b) * n[c];
                if (!is_zero(v)) entries.push_back({a, b, c, v});
            }
    return StructureConstants::validate(dim, entries);
}

RationalVector random_vector(Rng& rng, int dim, int max_numerator, int denominator)
{
    RationalVector v(dim);
    for (int i = 0; i < dim; ++i) v[i] = random_rational(rng, max_numerator, denominator);
    return v;
}

} // namespace

RandomRankOne random_rank_one(Rng& rng, int dim, bool nilpotent)
{
    if (dim < 2) throw Error("rank-one algebras need dim >= 2");
    // A nonzero antisymmetric 2x2 matrix is invertible.
    if (nilpotent && dim < 3) throw Error("nilpotent rank-one algebras need dim >= 3");
    while (true) {
        RationalMatrix omega = RationalMatrix::Zero(dim, dim);
        RationalVector n;
        if (!nilpotent) {
            const RationalVector p = random_vector(rng, dim, 1, 1);
            const RationalVector q = random_vector(rng, dim, 1, 1);
            omega = (p * q.transpose() - q * p.transpose()) / Rational(8);
            n = random_vector(rng, dim, 8, 8);
            if (all_zero(n) || all_zero(RationalVector(omega * n))) continue;
        } else {
            n = random_vector(rng, dim, 8, 8);
            if (all_zero(n)) continue;
            RationalMatrix a = RationalMatrix::Zero(dim, dim);
            for (int i = 0; i < dim; ++i)
                for (int j = i + 1; j < dim; ++j) {
                    a(i, j) = random_rational(rng, 8, 8);
                    a(j, i) = -a(i, j);
                }
            // Project out n on both sides: omega n = 0.
            const RationalMatrix proj =
                RationalMatrix::Identity(dim, dim) - (n * n.transpose()) / Rational(n.squaredNorm());
            omega = proj * a * proj;
            if (all_zero(omega)) continue;
        }
        return {from_omega_n(omega, n), omega, n};
    }
}

StructureConstants change_basis(const StructureConstants& alg, const RationalMatrix& p)
{
    const int dim = alg.dim();
    const RationalMatrix p_inv = p.inverse();
    std::vector<StructureConstants::Entry> entries;
    for (int a = 0; a < dim; ++a)
        for (int b = a + 1; b < dim; ++b) {
            const RationalVector br = p_inv * bracket(alg, RationalVector(p.col(a)), RationalVector(p.col(b)));
            for (int c = 0; c < dim; ++c)
                if (!is_zero(br[c])) entries.push_back({a, b, c, br[c]});
        }
    return StructureConstants::validate(dim, entries);
}

StructureConstants random_abelian_derived(Rng& rng, int k, int m)
{
    if (k < 1 || m < 1) throw Error("need k >= 1 and m >= 1");
    const int dim = k + m;
    RationalMatrix base(m, m);
    // ||M||_inf <= 1 and |r_i|, |s_i| <= 1/2, so ||A_i||_inf <= 1.
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) base(i, j) = random_rational(rng, 4, 4 * m);
    std::vector<RationalMatrix> act;
    for (int i = 0; i < k; ++i)
        act.push_back(random_rational(rng, 4, 8) * RationalMatrix::Identity(m, m) +
                      random_rational(rng, 4, 8) * base);
    std::vector<RationalVector> w;
    for (int i = 0; i < k; ++i) w.push_back(random_vector(rng, m, 2, 2));

    std::vector<StructureConstants::Entry> entries;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            const RationalVector c = act[i] * w[j] - act[j] * w[i];
            for (int e = 0; e < m; ++e)
                if (!is_zero(c[e])) entries.push_back({i, j, k + e, c[e]});
        }
        for (int b = 0; b < m; ++b)
            for (int e = 0; e < m; ++e)
                if (!is_zero(act[i](e, b))) entries.push_back({i, k + b, k + e, act[i](e, b)});
    }
    const auto alg = StructureConstants::validate(dim, entries);

    // Off-diagonal row sums at most 1/2: strictly diagonally dominant, so
    // invertible with ||P^-1||_inf <= 2.
    RationalMatrix p = RationalMatrix::Identity(dim, dim);
    if (dim > 1)
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                if (i != j) p(i, j) = random_rational(rng, 1, 2 * (dim - 1));
    return change_basis(alg, p);
}

} // namespace bchkit
