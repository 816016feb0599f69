#include "bchkit/subspace.hpp"

#include <algorithm>

#include "bchkit/errors.hpp"

namespace bchkit {

Subspace::Subspace(int ambient_dim) : ambient_(ambient_dim) {}

Subspace Subspace::span(int ambient_dim, const std::vector<RationalVector>& vectors)
{
    Subspace s(ambient_dim);
    for (const auto& v : vectors) s.insert(v);
    return s;
}

RationalVector Subspace::reduce(const RationalVector& v) const
{
    if (v.size() != ambient_) throw DimensionMismatch(ambient_, v.size());
    RationalVector r = v;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rational factor = r[pivots_[k]];
        if (!bchkit::is_zero(factor)) r -= factor * rows_[k];
    }
    return r;
}

bool Subspace::contains(const RationalVector& v) const { return all_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const
{
    return std::all_of(other.rows_.begin(), other.rows_.end(), [this](const auto& v) { return contains(v); });
}

RationalVector Subspace::coordinates(const RationalVector& v) const
{
    if (!contains(v)) throw Error("vector is not in the subspace");
    RationalVector c(dim());
    for (int k = 0; k < dim(); ++k) c[k] = v[pivots_[k]];
    return c;
}

RationalMatrix Subspace::basis_matrix() const
{
    RationalMatrix b(ambient_, dim());
    for (int k = 0; k < dim(); ++k) b.col(k) = rows_[k];
    return b;
}

RationalMatrix Subspace::restrict(const RationalMatrix& op) const
{
    RationalMatrix r(dim(), dim());
    for (int k = 0; k < dim(); ++k) r.col(k) = coordinates(op * rows_[k]);
    return r;
}

bool Subspace::operator==(const Subspace& other) const
{
    if (ambient_ != other.ambient_ || pivots_ != other.pivots_) return false;
    for (std::size_t k = 0; k < rows_.size(); ++k)
        if (!exactly_equal(rows_[k], other.rows_[k])) return false;
    return true;
}

bool Subspace::insert(RationalVector v)
{
    v = reduce(v);
    int pivot = 0;
    while (pivot < ambient_ && bchkit::is_zero(v[pivot])) ++pivot;
    if (pivot == ambient_) return false;

    v /= Rational(v[pivot]);
    for (auto& row : rows_) {
        const Rational factor = row[pivot];
        if (!bchkit::is_zero(factor)) row -= factor * v;
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, pivot);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

} // namespace bchkit
