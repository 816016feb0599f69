#include "bchkit/matrix_functions.hpp"

#include <cmath>
#include <limits>

#include "bchkit/errors.hpp"

namespace bchkit {

namespace {

constexpr double kPade13Theta = 5.371920351148152;
constexpr double kLogSeriesThreshold = 0.25;
constexpr int kMaxSquareRoots = 64;

double norm1(const Eigen::MatrixXd& a) { return a.cwiseAbs().colwise().sum().maxCoeff(); }

bool strictly_upper_triangular(const Eigen::MatrixXd& a)
{
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = j; i < a.rows(); ++i)
            if (a(i, j) != 0.0) return false;
    return true;
}

} // namespace

Eigen::MatrixXd matrix_exp(const Eigen::MatrixXd& a)
{
    static constexpr double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                                   1187353796428800.0,  129060195264000.0,   10559470521600.0,
                                   670442572800.0,      33522128640.0,       1323241920.0,
                                   40840800.0,          960960.0,            16380.0,
                                   182.0,               1.0};
    const Eigen::Index n = a.rows();
    if (n == 0) return a;
    const double norm = norm1(a);
    int squarings = 0;
    if (norm > kPade13Theta) squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / kPade13Theta))));
    const Eigen::MatrixXd s = a / std::ldexp(1.0, squarings);

    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    const Eigen::MatrixXd s2 = s * s;
    const Eigen::MatrixXd s4 = s2 * s2;
    const Eigen::MatrixXd s6 = s4 * s2;
    const Eigen::MatrixXd u =
        s * (s6 * (b[13] * s6 + b[11] * s4 + b[9] * s2) + b[7] * s6 + b[5] * s4 + b[3] * s2 + b[1] * id);
    const Eigen::MatrixXd v = s6 * (b[12] * s6 + b[10] * s4 + b[8] * s2) + b[6] * s6 + b[4] * s4 + b[2] * s2 + b[0] * id;
    Eigen::MatrixXd r = (v - u).partialPivLu().solve(v + u);
    for (int k = 0; k < squarings; ++k) r = r * r;
    return r;
}

Eigen::MatrixXd matrix_sqrt(const Eigen::MatrixXd& m)
{
    const Eigen::Index n = m.rows();
    Eigen::MatrixXd y = m;
    Eigen::MatrixXd z = Eigen::MatrixXd::Identity(n, n);
    double previous_change = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 100; ++it) {
        Eigen::FullPivLU<Eigen::MatrixXd> ly(y), lz(z);
        if (!ly.isInvertible() || !lz.isInvertible()) throw LogDomainError("square root iteration hit a singular matrix");
        const Eigen::MatrixXd y_next = 0.5 * (y + lz.inverse());
        const Eigen::MatrixXd z_next = 0.5 * (z + ly.inverse());
        const double change = norm1(y_next - y);
        y = y_next;
        z = z_next;
        if (!y.allFinite()) break;
        const double scale = norm1(y);
        if (change <= 1e-15 * scale) return y;
        // Quadratic convergence has stalled at rounding level.
        if (change <= 1e-10 * scale && change >= previous_change) return y;
        previous_change = change;
    }
    throw LogDomainError("square root iteration did not converge");
}

Eigen::MatrixXd matrix_log(const Eigen::MatrixXd& m)
{
    const Eigen::Index n = m.rows();
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    if (n == 0) return m;

    if (strictly_upper_triangular(m - id)) {
        // log(I + N) = N - N^2/2 + N^3/3 - ..., which stops at N^{n-1}.
        const Eigen::MatrixXd nil = m - id;
        Eigen::MatrixXd power = nil;
        Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
        for (Eigen::Index k = 1; k < n; ++k) {
            out += ((k % 2 == 1) ? 1.0 : -1.0) / static_cast<double>(k) * power;
            power = power * nil;
        }
        return out;
    }

    Eigen::MatrixXd r = m;
    int roots = 0;
    while (norm1(r - id) >= kLogSeriesThreshold) {
        if (++roots > kMaxSquareRoots) throw LogDomainError("matrix is outside the domain of the principal logarithm");
        r = matrix_sqrt(r);
    }
    const Eigen::MatrixXd zed = (r + id).partialPivLu().solve(r - id);
    const Eigen::MatrixXd z2 = zed * zed;
    Eigen::MatrixXd power = zed;
    Eigen::MatrixXd sum = zed;
    for (int k = 3; k < 200; k += 2) {
        power = power * z2;
        const Eigen::MatrixXd term = power / static_cast<double>(k);
        sum += term;
        if (norm1(term) <= 1e-18 * norm1(sum)) break;
    }
    return std::ldexp(2.0, roots) * sum;
}

} // namespace bchkit
