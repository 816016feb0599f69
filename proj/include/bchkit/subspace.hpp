#ifndef BCHKIT_SUBSPACE_HPP
#define BCHKIT_SUBSPACE_HPP

#include <vector>

#include "bchkit/rational.hpp"

namespace bchkit {

/// Exact linear subspace of Q^n stored in reduced row-echelon form.
///
/// Pivots are chosen lexicographically (first nonzero column) and scaled to 1,
/// so two Subspaces spanning the same space have identical bases and equality
/// is a plain comparison.
class Subspace {
public:
    /// The zero subspace of Q^ambient_dim.
    explicit Subspace(int ambient_dim);

    static Subspace span(int ambient_dim, const std::vector<RationalVector>& vectors);

    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    bool is_zero() const { return rows_.empty(); }

    const RationalVector& basis_vector(int i) const { return rows_[i]; }
    const std::vector<RationalVector>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// The part of v left over after eliminating against the basis; zero iff v is in the span.
    RationalVector reduce(const RationalVector& v) const;
    bool contains(const RationalVector& v) const;
    bool contains(const Subspace& other) const;

    /// Coefficients of v in basis(); v must lie in the subspace.
    RationalVector coordinates(const RationalVector& v) const;

    /// n x dim matrix whose columns are the basis vectors.
    RationalMatrix basis_matrix() const;

    /// Matrix of op restricted to this subspace, in basis coordinates.
    /// The subspace must be invariant under op.
    RationalMatrix restrict(const RationalMatrix& op) const;

    bool operator==(const Subspace& other) const;

private:
    // Returns true if the dimension grew.
    bool insert(RationalVector v);

    int ambient_;
    std::vector<RationalVector> rows_;
    std::vector<int> pivots_;
};

} // namespace bchkit

#endif
