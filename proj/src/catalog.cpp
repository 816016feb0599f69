#include "bchkit/catalog.hpp"

namespace bchkit {
namespace catalog {

namespace {

using Entry = StructureConstants::Entry;

Eigen::MatrixXd unit_matrix(int n, int row, int col)
{
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    m(row, col) = 1;
    return m;
}

RationalVector coords(std::initializer_list<Rational> values)
{
    RationalVector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (const auto& q : values) v[i++] = q;
    return v;
}

} // namespace

CatalogEntry abelian(int dim)
{
    if (dim < 1) throw Error("abelian algebra needs dim >= 1");
    auto alg = StructureConstants::validate(dim, {});
    return {"abelian" + std::to_string(dim), "abelian algebra of dimension " + std::to_string(dim), alg,
            std::nullopt, unit_vector(dim, 0), unit_vector(dim, dim > 1 ? 1 : 0), CaseTag::Commuting};
}

CatalogEntry heisenberg()
{
    const std::vector<Entry> f{{0, 1, 2, 1}};
    auto alg = StructureConstants::validate(3, f, {"P", "Q", "I"});
    auto rep = MatrixRep::validate(alg, {unit_matrix(3, 0, 1), unit_matrix(3, 1, 2), unit_matrix(3, 0, 2)},
                                   "strictly upper triangular 3x3");
    return {"heisenberg", "Heisenberg algebra [P,Q] = I", alg, rep, unit_vector(3, 0), unit_vector(3, 1),
            CaseTag::CentralBracket};
}

CatalogEntry affine()
{
    const std::vector<Entry> f{{0, 1, 1, 1}};
    auto alg = StructureConstants::validate(2, f, {"A", "B"});
    auto rep = MatrixRep::validate(alg, {unit_matrix(2, 0, 0), unit_matrix(2, 0, 1)}, "2x2 upper triangular");
    return {"affine", "affine (shift) algebra [A,B] = B", alg, rep, unit_vector(2, 0), unit_vector(2, 1),
            CaseTag::SimultaneousEigenvector};
}

CatalogEntry commutator_model(const Rational& u, const Rational& v, const Rational& c)
{
    std::vector<Entry> f;
    if (!is_zero(u)) f.push_back({0, 1, 0, u});
    if (!is_zero(v)) f.push_back({0, 1, 1, v});
    if (!is_zero(c)) f.push_back({0, 1, 2, c});
    auto alg = StructureConstants::validate(3, f, {"X", "Y", "I"});
    const CaseTag tag = (is_zero(u) && is_zero(v))
                            ? (is_zero(c) ? CaseTag::Commuting : CaseTag::CentralBracket)
                            : CaseTag::SimultaneousEigenvector;
    return {"commutator_model",
            "[X,Y] = uX + vY + cI with (u,v,c) = (" + to_string(u) + ", " + to_string(v) + ", " + to_string(c) + ")",
            alg, std::nullopt, unit_vector(3, 0), unit_vector(3, 1), tag};
}

CatalogEntry two_eigenvalue()
{
    const std::vector<Entry> f{{0, 2, 2, 1}, {1, 3, 3, 1}};
    auto alg = StructureConstants::validate(4, f, {"A1", "A2", "B1", "B2"});
    auto rep = MatrixRep::validate(
        alg, {unit_matrix(4, 0, 0), unit_matrix(4, 2, 2), unit_matrix(4, 0, 1), unit_matrix(4, 2, 3)},
        "two 2x2 affine blocks");
    return {"two_eigenvalue",
            "[A1,B1] = B1, [A2,B2] = B2",
            alg,
            rep,
            coords({1, 0, 0, 0}) + coords({0, 2, 0, 0}),
            coords({0, 0, 1, 1}),
            CaseTag::OperatorCommuting};
}

CatalogEntry sl2()
{
    const std::vector<Entry> f{{0, 1, 2, 1}, {2, 0, 0, 2}, {2, 1, 1, -2}};
    auto alg = StructureConstants::validate(3, f, {"E", "F", "H"});
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2, 2);
    h(0, 0) = 1;
    h(1, 1) = -1;
    auto rep = MatrixRep::validate(alg, {unit_matrix(2, 0, 1), unit_matrix(2, 1, 0), h}, "defining 2x2");
    return {"sl2", "sl(2): [E,F] = H, [H,E] = 2E, [H,F] = -2F", alg, rep, unit_vector(3, 0), unit_vector(3, 1),
            CaseTag::NoClosedForm};
}

} // namespace catalog

const std::vector<CatalogEntry>& builtin_catalog()
{
    static const std::vector<CatalogEntry> entries{
        catalog::abelian(3),
        catalog::heisenberg(),
        catalog::affine(),
        catalog::commutator_model(Rational(1, 3), Rational(-1, 2), 1),
        catalog::two_eigenvalue(),
        catalog::sl2(),
    };
    return entries;
}

const CatalogEntry* find_catalog_entry(const std::string& name)
{
    for (const auto& e : builtin_catalog())
        if (e.name == name) return &e;
    return nullptr;
}

} // namespace bchkit
