#include <cmath>

#include <gtest/gtest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "bchkit/catalog.hpp"
#include "bchkit/closed_form.hpp"
#include "bchkit/fuzz.hpp"
#include "bchkit/matrix_functions.hpp"
#include "test_support.hpp"

using namespace bchkit;
using namespace bchkit::testing;

namespace {

RationalVector br(const StructureConstants& alg, const RationalVector& a, const RationalVector& b)
{
    return bracket(alg, a, b);
}

} // namespace

TEST(IntegralSeries, DegreeThreeOnSl2)
{
    const auto alg = catalog::sl2().algebra;
    const RationalVector x = vec({1, q(-1, 2), q(1, 3)}), y = vec({q(2, 3), 1, -1});
    const RationalVector w = br(alg, x, y);
    const RationalVector expected = x + y + w / Rational(2) + br(alg, RationalVector(x - y), w) / Rational(12);
    EXPECT_TRUE(exactly_equal(bch_integral_series(alg, x, y, GradedTruncation(3)), expected));
}

TEST(IntegralSeries, DegreeFourTerm)
{
    const auto alg = catalog::sl2().algebra;
    const RationalVector x = vec({q(1, 2), 2, -1}), y = vec({-1, q(1, 5), q(3, 4)});
    const RationalVector w = br(alg, x, y);
    const RationalVector d3 = x + y + w / Rational(2) + br(alg, RationalVector(x - y), w) / Rational(12);
    const RationalVector d4 = d3 - br(alg, y, br(alg, x, w)) / Rational(24);
    EXPECT_TRUE(exactly_equal(bch_integral_series(alg, x, y, GradedTruncation(4)), d4));
}

TEST(IntegralSeries, GradedPiecesAreHomogeneous)
{
    // Pieces found from D = 5 evaluations agree with the D = 4 truncation.
    const auto alg = catalog::sl2().algebra;
    const RationalVector x = vec({1, 0, q(1, 2)}), y = vec({0, 1, q(-1, 3)});
    const auto pieces = graded_pieces(alg, x, y, 5);
    RationalVector sum = RationalVector::Zero(3);
    for (int d = 1; d <= 4; ++d) sum += pieces[d];
    EXPECT_TRUE(exactly_equal(sum, bch_integral_series(alg, x, y, GradedTruncation(4))));
    EXPECT_TRUE(exactly_equal(pieces[1], RationalVector(x + y)));
}

TEST(IntegralSeries, HeisenbergExactAtEveryDegree)
{
    const auto alg = catalog::heisenberg().algebra;
    const RationalVector x = vec({3, q(-1, 2), 1}), y = vec({q(2, 7), 5, -4});
    const RationalVector expected = x + y + br(alg, x, y) / Rational(2);
    for (int d = 2; d <= 9; ++d) EXPECT_TRUE(exactly_equal(bch_integral_series(alg, x, y, GradedTruncation(d)), expected));
}

TEST(IntegralSeries, CutoffsAreSufficient)
{
    const auto alg = catalog::two_eigenvalue().algebra;
    Rng rng(5);
    for (int d = 2; d <= 6; ++d) {
        const RationalVector x = random_small_element(rng, 4), y = random_small_element(rng, 4);
        const RationalVector minimal = bch_integral_series(alg, x, y, GradedTruncation(d));
        EXPECT_TRUE(exactly_equal(minimal, detail::bch_integral_series(alg, x, y, d, d + 3, d + 3))) << d;
    }
    const auto sl2 = catalog::sl2().algebra;
    const RationalVector x = vec({1, q(1, 2), 0}), y = vec({0, 1, q(1, 3)});
    EXPECT_TRUE(exactly_equal(bch_integral_series(sl2, x, y, GradedTruncation(5)),
                              detail::bch_integral_series(sl2, x, y, 5, 9, 9)));
}

TEST(IntegralSeries, RejectsDegreeBelowTwo) { EXPECT_THROW(GradedTruncation(1), Error); }

TEST(IntegralSeries, RankOneContractionThroughDegreeFour)
{
    // Z(alpha x, beta y) restricted to the span of n is
    // sum c_ij u0^i v0^j p0 alpha^{j+1} beta^{i+1} with u0 = -y.wn, v0 = x.wn.
    for (int trial = 0; trial < 4; ++trial) {
        Rng rng = instance_rng(11, trial);
        const auto gen = random_rank_one(rng, 3 + trial % 2, false);
        const auto fact = std::get<RankOneFactorization>(factorize_rank_one(gen.algebra));
        const int dim = gen.algebra.dim();
        const RationalVector x = random_small_element(rng, dim), y = random_small_element(rng, dim);
        const auto [u0, v0] = uv_from_rank_one<Rational>(fact, x, y);
        const Rational p0 = fact.pairing(x, y);

        // Sample on the triangle alpha + beta <= 4 and solve for the monomials
        // alpha^a beta^b, a + b <= 4, exactly.
        std::vector<std::pair<int, int>> mono;
        for (int d = 0; d <= 4; ++d)
            for (int b = 0; b <= d; ++b) mono.emplace_back(d - b, b);
        const int m = static_cast<int>(mono.size());
        RationalMatrix a(m, m), values(m, dim);
        int row = 0;
        for (int al = 0; al <= 4; ++al)
            for (int be = 0; al + be <= 4; ++be, ++row) {
                for (int k = 0; k < m; ++k) {
                    Rational t = 1;
                    for (int e = 0; e < mono[k].first; ++e) t *= al;
                    for (int e = 0; e < mono[k].second; ++e) t *= be;
                    a(row, k) = t;
                }
                values.row(row) = bch_integral_series(gen.algebra, RationalVector(x * Rational(al)),
                                                      RationalVector(y * Rational(be)), GradedTruncation(4))
                                      .transpose();
            }
        const RationalMatrix coeffs = a.fullPivLu().solve(values);
        const auto f = f_series(2);
        for (int k = 0; k < m; ++k) {
            const auto [pa, pb] = mono[k];
            RationalVector expected = RationalVector::Zero(dim);
            if (pa + pb == 1) expected = pa ? x : y;
            if (pa >= 1 && pb >= 1) {
                const int j = pa - 1, i = pb - 1;
                Rational t = f.coeff(i, j) * p0;
                for (int e = 0; e < i; ++e) t *= u0;
                for (int e = 0; e < j; ++e) t *= v0;
                expected = t * fact.n;
            }
            EXPECT_TRUE(exactly_equal(RationalVector(coeffs.row(k).transpose()), expected))
                << "alpha^" << pa << " beta^" << pb;
        }
    }
}

TEST(MatrixFunctions, ExpLogExamples)
{
    Eigen::Matrix2d rot;
    const double t = 0.7;
    rot << 0, -t, t, 0;
    Eigen::Matrix2d expected;
    expected << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    EXPECT_LT((matrix_exp(rot) - expected).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((matrix_log(expected) - rot).cwiseAbs().maxCoeff(), 1e-14);

    Eigen::Matrix3d nil = Eigen::Matrix3d::Zero();
    nil(0, 1) = 2;
    nil(1, 2) = 3;
    Eigen::Matrix3d e = Eigen::Matrix3d::Identity() + nil;
    e(0, 2) = 3;
    EXPECT_LT((matrix_exp(nil) - e).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((matrix_log(e) - nil).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_THROW(matrix_log(Eigen::MatrixXd(Eigen::Matrix2d(Eigen::Vector2d(-1, 2).asDiagonal()))), LogDomainError);
}

TEST(MatrixFunctions, AgreeWithEigenUnsupported)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dist(-1, 1);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + trial % 5;
        Eigen::MatrixXd a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = dist(rng) * (1 + trial % 3);
        const Eigen::MatrixXd ea = a.exp();
        EXPECT_LT((matrix_exp(a) - ea).norm() / ea.norm(), 1e-13) << trial;
        const Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n) + 0.3 * a / (1 + trial % 3);
        const Eigen::MatrixXd lm = m.log();
        EXPECT_LT((matrix_log(m) - lm).norm(), 1e-12) << trial;
        EXPECT_LT((matrix_exp(matrix_log(m)) - m).norm(), 1e-13) << trial;
        const Eigen::MatrixXd s = matrix_sqrt(m);
        EXPECT_LT((s * s - m).norm(), 1e-13) << trial;
    }
}

TEST(MatrixRep, CatalogRepresentationsValidate)
{
    for (const auto& e : builtin_catalog()) {
        if (!e.rep) continue;
        EXPECT_EQ(e.rep->dim(), e.algebra.dim()) << e.name;
        EXPECT_NO_THROW(MatrixRep::validate(e.algebra, e.rep->basis_images()));
    }
}

TEST(MatrixRep, RejectsNonHomomorphismAndDependentImages)
{
    const auto h = catalog::heisenberg();
    auto images = h.rep->basis_images();
    images[2] *= 2;
    EXPECT_THROW(MatrixRep::validate(h.algebra, images), RepresentationError);
    const auto ab = catalog::abelian(2).algebra;
    const Eigen::MatrixXd d = Eigen::Matrix2d::Identity();
    EXPECT_THROW(MatrixRep::validate(ab, {d, d}), RepresentationError);
}

TEST(MatrixRep, ExpansionResidual)
{
    const auto h = catalog::heisenberg();
    const auto ex = h.rep->expand(h.rep->image(Eigen::Vector3d(1, -2, 3)));
    EXPECT_LT(max_abs(ex.coords - Eigen::Vector3d(1, -2, 3)), 1e-15);
    EXPECT_LT(ex.residual, 1e-15);
    EXPECT_GT(h.rep->expand(Eigen::MatrixXd::Identity(3, 3)).residual, 1.0);
}

TEST(MatrixBch, HeisenbergAndAffine)
{
    const auto h = catalog::heisenberg();
    const auto r = matrix_bch(*h.rep, Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 1, 0));
    EXPECT_LT(max_abs(r.z - Eigen::Vector3d(1, 1, 0.5)), 1e-15);
    const auto a = catalog::affine();
    const auto s = matrix_bch(*a.rep, Eigen::Vector2d(1, 0), Eigen::Vector2d(0, 1));
    EXPECT_LT(max_abs(s.z - Eigen::Vector2d(1, 1 / (1 - std::exp(-1.0)))), 1e-14);
}

TEST(MatrixBch, AgreesWithSeriesOnSl2)
{
    const auto s = catalog::sl2();
    Rng rng(17);
    for (int i = 0; i < 20; ++i) {
        // The sl2 constants reach 2, so norm 1/8 keeps the degree-11 term well below 1e-8.
        const RationalVector x = random_small_element(rng, 3) / Rational(4), y = random_small_element(rng, 3) / Rational(4);
        const auto m = matrix_bch(*s.rep, to_real<double>(x), to_real<double>(y));
        const Eigen::VectorXd z = to_real<double>(bch_integral_series(s.algebra, x, y, GradedTruncation(10)));
        EXPECT_LT(max_abs(m.z - z), 1e-8) << i;
    }
}

TEST(ScalingLaw, TruncationErrorFallsAsDegreePlusOne)
{
    const auto alg = catalog::affine().algebra;
    const RationalVector x = vec({1, q(1, 2)}), y = vec({q(-1, 3), 1});
    const int degree = 6;
    std::vector<HighPrecision> errors;
    BchOptions hp;
    hp.tolerance = 1e-40;
    for (int k = 3; k <= 7; ++k) {
        const Rational eps(1, 1 << k);
        const RationalVector xe = x * eps, ye = y * eps;
        const auto exact = bch_closed_form<HighPrecision>(alg, xe, ye, hp);
        const Vector<HighPrecision> series = to_real<HighPrecision>(bch_integral_series(alg, xe, ye, GradedTruncation(degree)));
        errors.push_back((exact.z - series).cwiseAbs().maxCoeff());
    }
    const auto slope = scaling_slope(errors);
    ASSERT_TRUE(slope);
    EXPECT_GT(*slope, degree + 0.5);
    EXPECT_LT(*slope, degree + 1.5);
}
