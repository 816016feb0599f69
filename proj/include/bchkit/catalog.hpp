#ifndef BCHKIT_CATALOG_HPP
#define BCHKIT_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "bchkit/case_detect.hpp"
#include "bchkit/matrix_rep.hpp"

namespace bchkit {

/// A named example algebra with a documented test pair and the tag
/// classify_pair must report for it.
struct CatalogEntry {
    std::string name;
    std::string description;
    StructureConstants algebra;
    std::optional<MatrixRep> rep;
    RationalVector x;
    RationalVector y;
    CaseTag expected_tag;
};

namespace catalog {

/// dim-dimensional abelian algebra; pair e_0, e_1 (e_0, e_0 when dim = 1).
CatalogEntry abelian(int dim);

/// [P,Q] = I with rho(P) = E_12, rho(Q) = E_23, rho(I) = E_13.
CatalogEntry heisenberg();

/// [T_0,T_1] = T_1 with rho(T_0) = E_11, rho(T_1) = E_12.
CatalogEntry affine();

/// Basis (X, Y, I), [X,Y] = uX + vY + cI, I central. No representation.
CatalogEntry commutator_model(const Rational& u, const Rational& v, const Rational& c);

/// [T_0,T_2] = T_2, [T_1,T_3] = T_3: two commuting copies of the affine
/// algebra. Pair x = e_0 + 2e_1, y = e_2 + e_3 gives a bracket that is not an
/// eigenvector of L_X.
CatalogEntry two_eigenvalue();

/// [T_0,T_1] = T_2, [T_2,T_0] = 2T_0, [T_2,T_1] = -2T_1 with the defining
/// 2x2 representation.
CatalogEntry sl2();

} // namespace catalog

/// abelian(3), heisenberg, affine, commutator_model(1/3, -1/2, 1),
/// two_eigenvalue and sl2, in that order.
const std::vector<CatalogEntry>& builtin_catalog();

/// nullptr when no entry has that name.
const CatalogEntry* find_catalog_entry(const std::string& name);

} // namespace bchkit

#endif
