#ifndef BCHKIT_MATRIX_REP_HPP
#define BCHKIT_MATRIX_REP_HPP

#include <string>
#include <vector>

#include "bchkit/structure_constants.hpp"

namespace bchkit {

/// Images rho(T_a) of the basis under a faithful matrix representation.
class MatrixRep {
public:
    /// Checks rho([T_a,T_b]) = [rho(T_a), rho(T_b)] to 1e-12 and that the
    /// images are linearly independent. Throws RepresentationError.
    static MatrixRep validate(const StructureConstants& alg, std::vector<Eigen::MatrixXd> basis_images,
                              std::string faithful_on = {});

    int dim_rep() const { return static_cast<int>(images_.front().rows()); }
    int dim() const { return static_cast<int>(images_.size()); }
    const std::vector<Eigen::MatrixXd>& basis_images() const { return images_; }
    const std::string& faithful_on() const { return faithful_on_; }

    /// sum_a x^a rho(T_a)
    Eigen::MatrixXd image(const Eigen::VectorXd& x) const;

    struct Expansion {
        Eigen::VectorXd coords;
        /// Frobenius norm of what the basis images fail to reproduce.
        double residual;
    };

    /// Least-squares coordinates of z in span{rho(T_a)}.
    Expansion expand(const Eigen::MatrixXd& z) const;

private:
    MatrixRep() = default;

    std::vector<Eigen::MatrixXd> images_;
    std::string faithful_on_;
    Eigen::MatrixXd flat_;
    Eigen::MatrixXd pseudo_inverse_;
};

struct MatrixBchResult {
    Eigen::VectorXd z;
    double expansion_residual;
};

inline constexpr double kExpansionResidualLimit = 1e-9;

/// Coordinates of log(exp(rho(x)) exp(rho(y))). Throws
/// ExpansionResidualTooLarge when the logarithm leaves the span of the images.
MatrixBchResult matrix_bch(const MatrixRep& rep, const Eigen::VectorXd& x, const Eigen::VectorXd& y);

} // namespace bchkit

#endif
