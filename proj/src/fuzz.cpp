#include "bchkit/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "bchkit/catalog.hpp"
#include "bchkit/integral_series.hpp"
#include "bchkit/random_algebras.hpp"

namespace bchkit {

std::string to_string(FuzzFamily family)
{
    switch (family) {
    case FuzzFamily::RankOne: return "rank-one";
    case FuzzFamily::Case1: return "case1";
    case FuzzFamily::AbelianDerived: return "abelian-derived";
    case FuzzFamily::Catalog: return "catalog";
    }
    return "?";
}

FuzzFamily parse_fuzz_family(const std::string& name)
{
    for (auto f : {FuzzFamily::RankOne, FuzzFamily::Case1, FuzzFamily::AbelianDerived, FuzzFamily::Catalog})
        if (to_string(f) == name) return f;
    throw ParseError("unknown fuzz family \"" + name + "\"");
}

std::optional<double> scaling_slope(const std::vector<HighPrecision>& errors)
{
    // Beyond ~45 digits the closed form's own rounding takes over.
    const HighPrecision floor("1e-42");
    std::vector<double> lx, ly;
    for (std::size_t k = 0; k < errors.size(); ++k) {
        if (!(errors[k] > floor)) return std::nullopt;
        lx.push_back(-static_cast<double>(k + 3) * std::log(2.0));
        ly.push_back(static_cast<double>(log(errors[k])));
    }
    const double n = static_cast<double>(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < lx.size(); ++k) {
        sx += lx[k];
        sy += ly[k];
        sxx += lx[k] * lx[k];
        sxy += lx[k] * ly[k];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

bool hierarchy_sound(const StructureConstants& alg, const RationalVector& x, const RationalVector& y,
                     const CaseClassification& cls)
{
    switch (cls.tag) {
    case CaseTag::Commuting: return all_zero(bracket(alg, x, y));
    case CaseTag::CentralBracket: {
        const auto uv = simultaneous_eigenvalues(alg, x, y);
        return uv && is_zero(uv->first) && is_zero(uv->second) && is_zero(*cls.u) && is_zero(*cls.v);
    }
    case CaseTag::SimultaneousEigenvector: {
        const auto uv = simultaneous_eigenvalues(alg, x, y);
        return uv && uv->first == *cls.u && uv->second == *cls.v && pair_centralizer_condition(alg, x, y).holds;
    }
    case CaseTag::OperatorCommuting:
        return !simultaneous_eigenvalues(alg, x, y) && pair_centralizer_condition(alg, x, y).holds;
    case CaseTag::NoClosedForm:
        return !pair_centralizer_condition(alg, x, y).holds && !pair_center_condition(alg, x, y);
    }
    return false;
}

namespace {

std::uint64_t family_salt(FuzzFamily f)
{
    return 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(f) + 1);
}

struct Instance {
    StructureConstants algebra;
    RationalVector x;
    RationalVector y;
    std::optional<RankOneFactorization> rank_one;
    const MatrixRep* rep = nullptr;
    std::optional<RationalVector> case1_m;
    std::string origin;
};

Instance draw(FuzzFamily family, Rng& rng, int index)
{
    switch (family) {
    case FuzzFamily::RankOne: {
        const int dim = std::uniform_int_distribution<int>(2, 6)(rng);
        const bool nilpotent = dim >= 3 && std::uniform_int_distribution<int>(0, 2)(rng) == 0;
        auto r = random_rank_one(rng, dim, nilpotent);
        auto fact = std::get<RankOneFactorization>(factorize_rank_one(r.algebra));
        auto x = random_small_element(rng, dim);
        auto y = random_small_element(rng, dim);
        return {r.algebra, x, y, fact, nullptr, std::nullopt, nilpotent ? "omega n = 0" : "omega n != 0"};
    }
    case FuzzFamily::Case1: {
        const int dim = std::uniform_int_distribution<int>(2, 5)(rng);
        RationalVector m(dim);
        do {
            for (int i = 0; i < dim; ++i) m[i] = random_rational(rng, 8, 8);
        } while (all_zero(m));
        auto x = random_small_element(rng, dim);
        auto y = random_small_element(rng, dim);
        return {case1_build(m), x, y, std::nullopt, nullptr, m, "case1_build"};
    }
    case FuzzFamily::AbelianDerived: {
        const int k = std::uniform_int_distribution<int>(1, 2)(rng);
        const int m = std::uniform_int_distribution<int>(2, 3)(rng);
        auto alg = random_abelian_derived(rng, k, m);
        auto x = random_small_element(rng, k + m);
        auto y = random_small_element(rng, k + m);
        return {alg, x, y, std::nullopt, nullptr, std::nullopt, "abelian derived algebra"};
    }
    case FuzzFamily::Catalog: {
        std::vector<const CatalogEntry*> eligible;
        for (const auto& e : builtin_catalog())
            if (e.expected_tag != CaseTag::NoClosedForm) eligible.push_back(&e);
        const CatalogEntry& e = *eligible[index % eligible.size()];
        auto shrink = [](const RationalVector& v) {
            const double norm = to_real<double>(v).norm();
            return RationalVector(v / Rational(4 * static_cast<long>(std::ceil(norm))));
        };
        const int dim = e.algebra.dim();
        RationalVector x = shrink(e.x) + random_small_element(rng, dim) / Rational(2);
        RationalVector y = shrink(e.y) + random_small_element(rng, dim) / Rational(2);
        return {e.algebra, x, y, std::nullopt, e.rep ? &*e.rep : nullptr, std::nullopt, e.name};
    }
    }
    throw Error("unknown fuzz family");
}

template <class Real>
Vector<Real> closed_form(const Instance& in, const RationalVector& x, const RationalVector& y,
                         const BchOptions& opts)
{
    if (in.rank_one) return bch_rank_one<Real>(*in.rank_one, x, y, opts).z;
    return bch_closed_form<Real>(in.algebra, x, y, opts).z;
}

Json replay_json(FuzzFamily family, const FuzzConfig& config, int index, const Instance& in)
{
    Json out = {{"family", to_string(family)},
                {"seed", config.seed},
                {"index", index},
                {"origin", in.origin},
                {"algebra", to_json(in.algebra)},
                {"x", element_to_json(in.x)},
                {"y", element_to_json(in.y)}};
    if (in.case1_m) out["m"] = element_to_json(*in.case1_m)["coords"];
    return out;
}

FuzzRecord run_instance(FuzzFamily family, const FuzzConfig& config, int index)
{
    Rng rng = instance_rng(config.seed ^ family_salt(family), static_cast<std::uint64_t>(index));
    const Instance in = draw(family, rng, index);

    FuzzRecord rec;
    rec.family = family;
    rec.index = index;
    rec.dim = in.algebra.dim();
    BchOptions opts;
    opts.perturb_first_order = config.inject_bug;
    const GradedTruncation trunc(config.degree);

    try {
        const CaseClassification cls = classify_pair(in.algebra, in.x, in.y);
        rec.tag = cls.tag;
        rec.hierarchy_sound = hierarchy_sound(in.algebra, in.x, in.y, cls);
        if (!rec.hierarchy_sound) rec.note = "classification hierarchy violated";
        if (in.case1_m && cls.tag == CaseTag::SimultaneousEigenvector) {
            const auto id = case1_identify(*in.case1_m, 0, 0, in.x, in.y);
            if (id.u != *cls.u || id.v != *cls.v) {
                rec.hierarchy_sound = false;
                rec.note = "detected (u,v) differs from the construction";
            }
        }
        if (cls.tag == CaseTag::NoClosedForm) {
            rec.note = "no closed form for this pair";
        } else {
            const Eigen::VectorXd z = closed_form<double>(in, in.x, in.y, opts);
            const Eigen::VectorXd ref = to_real<double>(bch_integral_series(in.algebra, in.x, in.y, trunc));
            rec.error = (z - ref).cwiseAbs().maxCoeff();
            if (in.rep) {
                const auto m = matrix_bch(*in.rep, to_real<double>(in.x), to_real<double>(in.y));
                rec.error = std::max(rec.error, (z - m.z).cwiseAbs().maxCoeff());
            }
            if (config.slopes) {
                BchOptions hp = opts;
                hp.tolerance = 1e-40;
                hp.max_degree = kCachedSeriesDegree;
                std::vector<HighPrecision> errors;
                for (int k = 3; k <= 7; ++k) {
                    const Rational eps(1, 1 << k);
                    const RationalVector ex = in.x * eps;
                    const RationalVector ey = in.y * eps;
                    const Vector<HighPrecision> zc = closed_form<HighPrecision>(in, ex, ey, hp);
                    const Vector<HighPrecision> zs =
                        to_real<HighPrecision>(bch_integral_series(in.algebra, ex, ey, trunc));
                    errors.push_back((zc - zs).cwiseAbs().maxCoeff());
                }
                rec.slope = scaling_slope(errors);
            }
        }
    } catch (const Error& e) {
        rec.ok = false;
        rec.note = e.what();
    }
    if (!rec.hierarchy_sound || !(rec.error < config.tolerance) ||
        (rec.slope && !(*rec.slope > config.slope_threshold())))
        rec.ok = false;
    if (!rec.ok) rec.replay = replay_json(family, config, index, in);
    return rec;
}

} // namespace

int FuzzReport::failures() const
{
    return static_cast<int>(std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.ok; }));
}

double FuzzReport::max_error() const
{
    double m = 0;
    for (const auto& r : records) m = std::max(m, r.error);
    return m;
}

std::optional<double> FuzzReport::min_slope() const
{
    std::optional<double> m;
    for (const auto& r : records)
        if (r.slope && (!m || *r.slope < *m)) m = r.slope;
    return m;
}

Json FuzzReport::to_json() const
{
    Json families = Json::object();
    for (auto f : config.families) {
        int count = 0, failed = 0, with_slope = 0;
        double max_error = 0;
        std::optional<double> min_slope;
        Json tags = Json::object();
        for (const auto& r : records) {
            if (r.family != f) continue;
            ++count;
            if (!r.ok) ++failed;
            max_error = std::max(max_error, r.error);
            if (r.slope) {
                ++with_slope;
                if (!min_slope || *r.slope < *min_slope) min_slope = r.slope;
            }
            const std::string tag = bchkit::to_string(r.tag);
            tags[tag] = tags.value(tag, 0) + 1;
        }
        families[bchkit::to_string(f)] = {{"instances", count},
                                          {"failures", failed},
                                          {"max_error", max_error},
                                          {"min_slope", min_slope ? Json(*min_slope) : Json(nullptr)},
                                          {"slopes_measured", with_slope},
                                          {"tags", std::move(tags)}};
    }
    Json violations = Json::array();
    for (const auto& r : records) {
        if (r.ok) continue;
        Json v = r.replay;
        v["tag"] = bchkit::to_string(r.tag);
        v["error"] = r.error;
        v["slope"] = r.slope ? Json(*r.slope) : Json(nullptr);
        v["hierarchy_sound"] = r.hierarchy_sound;
        if (!r.note.empty()) v["note"] = r.note;
        violations.push_back(std::move(v));
    }
    const auto ms = min_slope();
    return {{"seed", config.seed},
            {"n", config.n},
            {"degree", config.degree},
            {"tolerance", config.tolerance},
            {"slope_threshold", config.slope_threshold()},
            {"inject_bug", config.inject_bug},
            {"instances", records.size()},
            {"failures", failures()},
            {"max_error", max_error()},
            {"min_slope", ms ? Json(*ms) : Json(nullptr)},
            {"families", std::move(families)},
            {"violations", std::move(violations)},
            {"ok", ok()}};
}

FuzzReport run_fuzz(const FuzzConfig& config)
{
    if (config.n < 0) throw Error("fuzz instance count must be non-negative");
    FuzzReport report;
    report.config = config;
    const std::size_t per_family = static_cast<std::size_t>(config.n);
    const std::size_t total = per_family * config.families.size();
    report.records.resize(total);

    int threads = config.threads > 0 ? config.threads : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min<int>(threads, static_cast<int>(std::max<std::size_t>(total, 1))));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < total; k = next++) {
            const FuzzFamily family = config.families[k / per_family];
            report.records[k] = run_instance(family, config, static_cast<int>(k % per_family));
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return report;
}

} // namespace bchkit
