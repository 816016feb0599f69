#include "bchkit/matrix_rep.hpp"

#include "bchkit/matrix_functions.hpp"

namespace bchkit {

MatrixRep MatrixRep::validate(const StructureConstants& alg, std::vector<Eigen::MatrixXd> basis_images,
                              std::string faithful_on)
{
    if (static_cast<int>(basis_images.size()) != alg.dim())
        throw RepresentationError("representation has " + std::to_string(basis_images.size()) +
                                  " basis images, algebra has dimension " + std::to_string(alg.dim()));
    const Eigen::Index n = basis_images.front().rows();
    for (const auto& m : basis_images)
        if (m.rows() != n || m.cols() != n) throw RepresentationError("basis images must all be square of one size");

    for (int a = 0; a < alg.dim(); ++a)
        for (int b = a + 1; b < alg.dim(); ++b) {
            Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(n, n);
            for (int c = 0; c < alg.dim(); ++c) expected += to_real<double>(alg(a, b, c)) * basis_images[c];
            const Eigen::MatrixXd commutator = basis_images[a] * basis_images[b] - basis_images[b] * basis_images[a];
            if ((commutator - expected).cwiseAbs().maxCoeff() > 1e-12)
                throw RepresentationError("representation fails [rho(T_" + std::to_string(a) + "), rho(T_" +
                                          std::to_string(b) + ")] = rho([T_a, T_b])");
        }

    MatrixRep rep;
    rep.flat_.resize(n * n, alg.dim());
    for (int a = 0; a < alg.dim(); ++a) rep.flat_.col(a) = basis_images[a].reshaped();
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(rep.flat_);
    if (cod.rank() != alg.dim()) throw RepresentationError("basis images are linearly dependent (not faithful)");
    rep.pseudo_inverse_ = cod.pseudoInverse();
    rep.images_ = std::move(basis_images);
    rep.faithful_on_ = std::move(faithful_on);
    return rep;
}

Eigen::MatrixXd MatrixRep::image(const Eigen::VectorXd& x) const
{
    if (x.size() != dim()) throw DimensionMismatch(dim(), x.size());
    return (flat_ * x).reshaped(dim_rep(), dim_rep());
}

MatrixRep::Expansion MatrixRep::expand(const Eigen::MatrixXd& z) const
{
    const Eigen::VectorXd flat = z.reshaped();
    Eigen::VectorXd coords = pseudo_inverse_ * flat;
    return {coords, (flat_ * coords - flat).norm()};
}

MatrixBchResult matrix_bch(const MatrixRep& rep, const Eigen::VectorXd& x, const Eigen::VectorXd& y)
{
    const Eigen::MatrixXd z = matrix_log(matrix_exp(rep.image(x)) * matrix_exp(rep.image(y)));
    auto [coords, residual] = rep.expand(z);
    if (!(residual < kExpansionResidualLimit)) throw ExpansionResidualTooLarge(residual);
    return {std::move(coords), residual};
}

} // namespace bchkit
