#include "bchkit/closed_form.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <Eigen/QR>

namespace bchkit {

std::string to_string(BchMethod method)
{
    switch (method) {
    case BchMethod::Sum: return "Sum";
    case BchMethod::Central: return "Central";
    case BchMethod::ScalarF: return "ScalarF";
    case BchMethod::OperatorF: return "OperatorF";
    }
    return "?";
}

namespace {

const Rational kFirstOrderShift = Rational(1, 11) - Rational(1, 12);

template <class Real>
double f_relative_accuracy()
{
    if constexpr (std::is_same_v<Real, double>) {
        return kFRelativeAccuracy;
    } else {
        return 1e3 * static_cast<double>(std::numeric_limits<Real>::epsilon());
    }
}

template <class Real>
BchResult<Real> exact_result(RationalVector z, BchMethod method)
{
    BchResult<Real> r;
    r.z = to_real<Real>(z);
    r.z_exact = std::move(z);
    r.method = method;
    r.exact = true;
    return r;
}

template <class Real>
Real evaluate_f(const Rational& u, const Rational& v, const BchOptions& opts)
{
    Real f = f_scalar<Real>(to_real<Real>(u), to_real<Real>(v));
    if (opts.perturb_first_order) f += to_real<Real>(kFirstOrderShift * (u + v));
    return f;
}

double max_row_sum(const RationalMatrix& m)
{
    double best = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        double row = 0;
        for (Eigen::Index j = 0; j < m.cols(); ++j) row += std::abs(to_real<double>(m(i, j)));
        best = std::max(best, row);
    }
    return best;
}

bool nilpotent(const RationalMatrix& m)
{
    RationalMatrix p = m;
    for (Eigen::Index k = 1; k < m.rows(); ++k) p = p * m;
    return m.rows() == 0 || all_zero(p);
}

/// sum_{i+j=d} |c_ij| for the cached series of f.
const std::vector<double>& degree_abs_sums()
{
    static const std::vector<double> sums = [] {
        const auto& s = f_series_cached();
        std::vector<double> out(s.max_degree() + 1, 0.0);
        for (int d = 0; d <= s.max_degree(); ++d)
            for (int j = 0; j <= d; ++j) out[d] += std::abs(to_real<double>(s.coeff(d - j, j)));
        return out;
    }();
    return sums;
}

/// Bound on | sum_{i+j>D} c_ij L_X^i (-L_Y)^j w | given norms on S.
double operator_tail_bound(int degree, double rho, double scale)
{
    const auto& sums = degree_abs_sums();
    const int top = static_cast<int>(sums.size()) - 1;
    double tail = 0;
    double power = std::pow(rho, degree + 1);
    for (int d = degree + 1; d <= top; ++d, power *= rho) tail += sums[d] * power;
    // Beyond the cached table, extrapolate geometrically at the radius pi.
    const double q = rho / std::numbers::pi;
    tail += sums[top] * std::pow(rho, top) * q / (1 - q);
    return scale * tail;
}

Rational series_coeff(const BivariateSeries<Rational>& s, int i, int j, const BchOptions& opts)
{
    Rational c = s.coeff(i, j);
    if (opts.perturb_first_order && i + j == 1) c += kFirstOrderShift;
    return c;
}

} // namespace

template <class Real>
BchResult<Real> bch_special(const StructureConstants& alg, const RationalVector& x, const RationalVector& y,
                            CaseTag tag)
{
    const RationalVector w = bracket(alg, x, y);
    switch (tag) {
    case CaseTag::Commuting:
        if (!all_zero(w)) throw ClassificationMismatch("bch_special: [X,Y] is not zero");
        return exact_result<Real>(x + y, BchMethod::Sum);
    case CaseTag::CentralBracket:
        if (!all_zero(adjoint(alg, w))) throw ClassificationMismatch("bch_special: [X,Y] is not central");
        return exact_result<Real>(x + y + Rational(1, 2) * w, BchMethod::Central);
    default: throw ClassificationMismatch("bch_special handles only Commuting and CentralBracket");
    }
}

template <class Real>
BchResult<Real> bch_eigenpair(const StructureConstants& alg, const RationalVector& x, const RationalVector& y,
                              const Rational& u, const Rational& v, const BchOptions& opts)
{
    const RationalVector w = bracket(alg, x, y);
    if (!all_zero(RationalVector(bracket(alg, x, w) - v * w)) || !all_zero(RationalVector(bracket(alg, y, w) + u * w)))
        throw ClassificationMismatch("bch_eigenpair: [X,Y] is not an eigenvector with the given (u, v)");
    if (all_zero(w)) return exact_result<Real>(x + y, BchMethod::Sum);
    if (is_zero(u) && is_zero(v) && !opts.perturb_first_order) {
        auto r = exact_result<Real>(x + y + Rational(1, 2) * w, BchMethod::Central);
        r.u = u;
        r.v = v;
        return r;
    }
    const Real f = evaluate_f<Real>(u, v, opts);
    BchResult<Real> r;
    r.z = to_real<Real>(RationalVector(x + y)) + f * to_real<Real>(w);
    r.method = BchMethod::ScalarF;
    r.u = u;
    r.v = v;
    using std::abs;
    r.residual_bound = f_relative_accuracy<Real>() * static_cast<double>(abs(f)) *
                       to_real<double>(w).cwiseAbs().maxCoeff();
    return r;
}

template <class Real>
BchResult<Real> bch_rank_one(const RankOneFactorization& fact, const RationalVector& x, const RationalVector& y,
                             const BchOptions& opts)
{
    const auto [u, v] = uv_from_rank_one<Rational>(fact, x, y);
    const Rational p = fact.pairing(x, y);
    if (is_zero(p)) return exact_result<Real>(x + y, BchMethod::Sum);
    if (is_zero(u) && is_zero(v) && !opts.perturb_first_order) {
        auto r = exact_result<Real>(x + y + Rational(p / 2) * fact.n, BchMethod::Central);
        r.u = u;
        r.v = v;
        return r;
    }
    const Real f = evaluate_f<Real>(u, v, opts);
    BchResult<Real> r;
    r.z = to_real<Real>(RationalVector(x + y)) + (f * to_real<Real>(p)) * to_real<Real>(fact.n);
    r.method = BchMethod::ScalarF;
    r.u = u;
    r.v = v;
    using std::abs;
    r.residual_bound = f_relative_accuracy<Real>() * static_cast<double>(abs(f)) *
                       to_real<double>(RationalVector(p * fact.n)).cwiseAbs().maxCoeff();
    return r;
}

template <class Real>
Vector<Real> oplus(const RankOneFactorization& fact, const Vector<Real>& x, const Vector<Real>& y)
{
    const auto [u, v] = uv_from_rank_one<Real>(fact, x, y);
    const Real p = x.dot(to_real<Real>(fact.omega) * y);
    if (p == 0) return x + y;
    return x + y + (f_scalar<Real>(u, v) * p) * to_real<Real>(fact.n);
}

template <class Real>
BchResult<Real> bch_operator(const StructureConstants& alg, const RationalVector& x, const RationalVector& y,
                             const Subspace& S, const BchOptions& opts)
{
    const RationalVector w = bracket(alg, x, y);
    const RationalMatrix lx = adjoint(alg, x);
    const RationalMatrix ly = adjoint(alg, y);
    if (!S.contains(w)) throw ClassificationMismatch("bch_operator: S does not contain [X,Y]");
    const RationalMatrix ad_w = adjoint(alg, w);
    for (const auto& s : S.basis()) {
        if (!S.contains(RationalVector(lx * s)) || !S.contains(RationalVector(ly * s)))
            throw ClassificationMismatch("bch_operator: S is not invariant under L_X and L_Y");
        if (!all_zero(RationalVector(ad_w * s)))
            throw ClassificationMismatch("bch_operator: [X,Y] does not centralize S");
    }
    if (all_zero(w)) return exact_result<Real>(x + y, BchMethod::Sum);

    const RationalMatrix ax = S.restrict(lx);
    const RationalMatrix ay = S.restrict(ly);

    if (nilpotent(ax) && nilpotent(ay)) {
        // L_X and L_Y commute on S, so once every degree-d term vanishes all
        // higher ones do too.
        std::vector<RationalVector> level{w}; // level[j] = L_X^{d-j} L_Y^j w
        std::vector<std::vector<RationalVector>> levels;
        while (true) {
            if (std::all_of(level.begin(), level.end(), [](const auto& t) { return all_zero(t); })) break;
            levels.push_back(level);
            std::vector<RationalVector> next;
            for (const auto& t : level) next.push_back(lx * t);
            next.push_back(ly * level.back());
            level = std::move(next);
        }
        const int top = static_cast<int>(levels.size()) - 1;
        const BivariateSeries<Rational> coeffs =
            top <= kCachedSeriesDegree ? f_series_cached().truncated(top) : f_series(top);
        RationalVector z = x + y;
        for (int d = 0; d <= top; ++d)
            for (int j = 0; j <= d; ++j) {
                const Rational c = series_coeff(coeffs, d - j, j, opts);
                if (!is_zero(c)) z += (j % 2 == 0 ? c : Rational(-c)) * levels[d][j];
            }
        auto r = exact_result<Real>(std::move(z), BchMethod::OperatorF);
        r.truncation_degree = std::max(top, 0);
        return r;
    }

    // The row-sum bound holds in any basis of S; the canonical rational basis
    // can be badly conditioned, so an orthonormal one is tried as well.
    struct Norms {
        double rho;
        double scale;
    };
    const Norms canonical{std::max(max_row_sum(ax), max_row_sum(ay)),
                          max_row_sum(S.basis_matrix()) * to_real<double>(S.coordinates(w)).cwiseAbs().maxCoeff()};
    const Eigen::MatrixXd basis = to_real<double>(S.basis_matrix());
    const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(basis).householderQ() *
                              Eigen::MatrixXd::Identity(basis.rows(), basis.cols());
    auto row_sum = [](const Eigen::MatrixXd& m) { return m.cwiseAbs().rowwise().sum().maxCoeff(); };
    const Norms orthonormal{std::max(row_sum(q.transpose() * to_real<double>(lx) * q),
                                     row_sum(q.transpose() * to_real<double>(ly) * q)),
                            row_sum(q) * (q.transpose() * to_real<double>(w)).cwiseAbs().maxCoeff()};
    const double rho = std::min(canonical.rho, orthonormal.rho);
    if (rho >= std::numbers::pi)
        throw NonConvergence("operator series: adjoint norm on S is " + std::to_string(rho) + " >= pi",
                             std::numeric_limits<double>::infinity());
    auto tail = [&](int degree) {
        double best = std::numeric_limits<double>::infinity();
        for (const Norms& n : {canonical, orthonormal})
            if (n.rho < std::numbers::pi) best = std::min(best, operator_tail_bound(degree, n.rho, n.scale));
        return best;
    };
    const int cap = std::min(opts.max_degree, kCachedSeriesDegree);
    int degree = 0;
    double bound = tail(0);
    while (bound >= opts.tolerance && degree < cap) bound = tail(++degree);
    if (bound >= opts.tolerance)
    {
        std::ostringstream msg;
        msg << "operator series: tail bound " << bound << " at degree " << degree << " exceeds tolerance "
            << opts.tolerance;
        throw NonConvergence(msg.str(), bound);
    }

    const Matrix<Real> lx_r = to_real<Real>(lx);
    const Matrix<Real> ly_r = to_real<Real>(ly);
    const auto& coeffs = f_series_cached();
    Vector<Real> z = to_real<Real>(RationalVector(x + y));
    std::vector<Vector<Real>> level{to_real<Real>(w)};
    for (int d = 0; d <= degree; ++d) {
        for (int j = 0; j <= d; ++j) {
            const Real c = to_real<Real>(series_coeff(coeffs, d - j, j, opts));
            z += (j % 2 == 0 ? c : Real(-c)) * level[j];
        }
        std::vector<Vector<Real>> next;
        for (const auto& t : level) next.push_back(lx_r * t);
        next.push_back(ly_r * level.back());
        level = std::move(next);
    }
    BchResult<Real> r;
    r.z = std::move(z);
    r.method = BchMethod::OperatorF;
    r.truncation_degree = degree;
    r.residual_bound = bound;
    return r;
}

template <class Real>
BchResult<Real> bch_closed_form(const StructureConstants& alg, const CaseClassification& cls, const RationalVector& x,
                                const RationalVector& y, const BchOptions& opts)
{
    switch (cls.tag) {
    case CaseTag::Commuting:
    case CaseTag::CentralBracket: return bch_special<Real>(alg, x, y, cls.tag);
    case CaseTag::SimultaneousEigenvector: return bch_eigenpair<Real>(alg, x, y, *cls.u, *cls.v, opts);
    case CaseTag::OperatorCommuting: return bch_operator<Real>(alg, x, y, *cls.S, opts);
    case CaseTag::NoClosedForm: break;
    }
    throw NoClosedForm("no closed-form condition holds for this pair");
}

template <class Real>
BchResult<Real> bch_closed_form(const StructureConstants& alg, const RationalVector& x, const RationalVector& y,
                                const BchOptions& opts)
{
    return bch_closed_form<Real>(alg, classify_pair(alg, x, y), x, y, opts);
}

StructureConstants case1_build(const RationalVector& m)
{
    const int dim = static_cast<int>(m.size());
    std::vector<StructureConstants::Entry> entries;
    // f_ab^c = (m_a delta_b^c - m_b delta_a^c)/2
    for (int a = 0; a < dim; ++a)
        for (int b = a + 1; b < dim; ++b) {
            if (!is_zero(m[a])) entries.push_back({a, b, b, Rational(m[a] / 2)});
            if (!is_zero(m[b])) entries.push_back({a, b, a, Rational(-m[b] / 2)});
        }
    return StructureConstants::validate(dim, entries);
}

ShiftedCommutator case1_identify(const RationalVector& m, const Rational& alpha, const Rational& beta,
                                 const RationalVector& x, const RationalVector& y)
{
    if (x.size() != m.size()) throw DimensionMismatch(m.size(), x.size());
    if (y.size() != m.size()) throw DimensionMismatch(m.size(), y.size());
    const Rational xm = x.dot(m);
    const Rational ym = y.dot(m);
    return {Rational(-ym / 2), Rational(xm / 2), Rational((xm * beta - ym * alpha) / 2)};
}

#define BCHKIT_CLOSED_FORM_INSTANTIATE(Real)                                                                          \
    template BchResult<Real> bch_special<Real>(const StructureConstants&, const RationalVector&,                       \
                                               const RationalVector&, CaseTag);                                       \
    template BchResult<Real> bch_eigenpair<Real>(const StructureConstants&, const RationalVector&,                     \
                                                 const RationalVector&, const Rational&, const Rational&,             \
                                                 const BchOptions&);                                                  \
    template BchResult<Real> bch_rank_one<Real>(const RankOneFactorization&, const RationalVector&,                   \
                                                const RationalVector&, const BchOptions&);                            \
    template Vector<Real> oplus<Real>(const RankOneFactorization&, const Vector<Real>&, const Vector<Real>&);         \
    template BchResult<Real> bch_operator<Real>(const StructureConstants&, const RationalVector&,                      \
                                                const RationalVector&, const Subspace&, const BchOptions&);           \
    template BchResult<Real> bch_closed_form<Real>(const StructureConstants&, const CaseClassification&,              \
                                                   const RationalVector&, const RationalVector&, const BchOptions&);  \
    template BchResult<Real> bch_closed_form<Real>(const StructureConstants&, const RationalVector&,                  \
                                                   const RationalVector&, const BchOptions&);

BCHKIT_CLOSED_FORM_INSTANTIATE(double)
BCHKIT_CLOSED_FORM_INSTANTIATE(HighPrecision)

} // namespace bchkit
