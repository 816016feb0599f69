#include "bchkit/structure_constants.hpp"

#include <optional>

namespace bchkit {

StructureConstants StructureConstants::validate(int dim, std::span<const Entry> entries,
                                                std::vector<std::string> basis_names)
{
    if (dim < 1) throw ParseError("algebra dimension must be at least 1");
    if (!basis_names.empty() && static_cast<int>(basis_names.size()) != dim)
        throw ParseError("basis_names has " + std::to_string(basis_names.size()) + " entries, dim is " +
                         std::to_string(dim));

    StructureConstants alg;
    alg.ad_.assign(dim, RationalMatrix::Zero(dim, dim));

    // Values supplied so far for each (a, b, c), oriented as given.
    std::vector<std::optional<Rational>> given(static_cast<std::size_t>(dim) * dim * dim);
    auto slot = [dim](int a, int b, int c) { return (static_cast<std::size_t>(a) * dim + b) * dim + c; };

    for (const Entry& e : entries) {
        if (e.a < 0 || e.b < 0 || e.c < 0 || e.a >= dim || e.b >= dim || e.c >= dim)
            throw IndexOutOfRange(e.a, e.b, e.c, dim);
        if (e.a == e.b) {
            if (!is_zero(e.value)) throw AntisymmetryViolation(e.a, e.b, e.c);
            continue;
        }
        auto& same = given[slot(e.a, e.b, e.c)];
        const auto& mirror = given[slot(e.b, e.a, e.c)];
        if ((same && *same != e.value) || (mirror && *mirror != -e.value))
            throw AntisymmetryViolation(e.a, e.b, e.c);
        same = e.value;
        alg.ad_[e.a](e.c, e.b) = e.value;
        alg.ad_[e.b](e.c, e.a) = -e.value;
    }

    // The cyclic sum is totally antisymmetric in (a, b, c), so a < b < c suffices.
    for (int a = 0; a < dim; ++a)
        for (int b = a + 1; b < dim; ++b)
            for (int c = b + 1; c < dim; ++c)
                for (int e = 0; e < dim; ++e) {
                    Rational r = 0;
                    for (int m = 0; m < dim; ++m)
                        r += alg(a, b, m) * alg(m, c, e) + alg(b, c, m) * alg(m, a, e) + alg(c, a, m) * alg(m, b, e);
                    if (!is_zero(r)) throw JacobiViolation(a, b, c, e, to_string(r));
                }

    if (basis_names.empty())
        for (int a = 0; a < dim; ++a) basis_names.push_back("T" + std::to_string(a));
    alg.names_ = std::move(basis_names);
    for (const auto& m : alg.ad_) alg.ad_double_.push_back(to_real<double>(m));
    return alg;
}

std::vector<StructureConstants::Entry> StructureConstants::entries() const
{
    std::vector<Entry> out;
    for (int a = 0; a < dim(); ++a)
        for (int b = a + 1; b < dim(); ++b)
            for (int c = 0; c < dim(); ++c)
                if (!is_zero((*this)(a, b, c))) out.push_back({a, b, c, (*this)(a, b, c)});
    return out;
}

bool StructureConstants::operator==(const StructureConstants& other) const
{
    if (dim() != other.dim()) return false;
    for (int a = 0; a < dim(); ++a)
        if (!exactly_equal(ad_[a], other.ad_[a])) return false;
    return true;
}

} // namespace bchkit
