#ifndef BCHKIT_MATRIX_FUNCTIONS_HPP
#define BCHKIT_MATRIX_FUNCTIONS_HPP

#include <Eigen/Dense>

namespace bchkit {

/// Scaling and squaring with the [13/13] Pade approximant.
Eigen::MatrixXd matrix_exp(const Eigen::MatrixXd& a);

/// Principal logarithm by inverse scaling and squaring: Denman-Beavers square
/// roots until ||M - I||_1 < 0.25, then the series 2 atanh((M-I)(M+I)^-1).
/// Unipotent upper-triangular input takes the terminating series directly.
/// Throws LogDomainError if the square roots do not converge toward I.
Eigen::MatrixXd matrix_log(const Eigen::MatrixXd& m);

/// Principal square root by the Denman-Beavers iteration.
Eigen::MatrixXd matrix_sqrt(const Eigen::MatrixXd& m);

} // namespace bchkit

#endif
