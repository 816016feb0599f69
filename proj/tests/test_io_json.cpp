#include <filesystem>

#include <gtest/gtest.h>

#include "bchkit/catalog.hpp"
#include "bchkit/io_json.hpp"
#include "test_support.hpp"

using namespace bchkit;
using namespace bchkit::testing;

namespace {

const std::filesystem::path kCatalogDir = BCHKIT_CATALOG_DIR;

} // namespace

TEST(AlgebraJson, RoundTrip)
{
    for (const auto& e : builtin_catalog()) {
        const Json doc = to_json(e.algebra);
        const auto back = algebra_from_json(Json::parse(doc.dump()));
        EXPECT_TRUE(back == e.algebra) << e.name;
        EXPECT_EQ(back.basis_names(), e.algebra.basis_names());
    }
}

TEST(AlgebraJson, CatalogFilesMatchBuiltins)
{
    for (const auto& e : builtin_catalog()) {
        const auto file = algebra_from_json(load_json_file(kCatalogDir / (e.name + ".json")));
        EXPECT_TRUE(file == e.algebra) << e.name;
        const auto x = element_from_json(load_json_file(kCatalogDir / (e.name + ".x.json")), e.algebra.dim());
        const auto y = element_from_json(load_json_file(kCatalogDir / (e.name + ".y.json")), e.algebra.dim());
        EXPECT_TRUE(exactly_equal(x, e.x)) << e.name;
        EXPECT_TRUE(exactly_equal(y, e.y)) << e.name;
        const auto rep_path = kCatalogDir / (e.name + ".rep.json");
        EXPECT_EQ(std::filesystem::exists(rep_path), e.rep.has_value()) << e.name;
        if (e.rep) {
            const auto rep = rep_from_json(load_json_file(rep_path), e.algebra);
            ASSERT_EQ(rep.dim(), e.rep->dim());
            for (int a = 0; a < rep.dim(); ++a)
                EXPECT_EQ(rep.basis_images()[a], e.rep->basis_images()[a]) << e.name << " image " << a;
        }
    }
}

TEST(AlgebraJson, AcceptsIntegerValuesAndOneOrientation)
{
    const Json doc = Json::parse(R"({"dim": 2, "f": [{"a": 1, "b": 0, "c": 1, "v": -1}]})");
    EXPECT_TRUE(algebra_from_json(doc) == catalog::affine().algebra);
}

TEST(AlgebraJson, Malformed)
{
    EXPECT_THROW(algebra_from_json(Json::parse(R"({"f": []})")), ParseError);
    EXPECT_THROW(algebra_from_json(Json::parse(R"({"dim": 2, "f": [{"a": 0, "b": 1, "c": 1}]})")), ParseError);
    EXPECT_THROW(algebra_from_json(Json::parse(R"({"dim": 2, "f": [{"a": 0, "b": 1, "c": 1, "v": "1/0"}]})")),
                 ParseError);
    EXPECT_THROW(algebra_from_json(Json::parse(R"({"dim": 2, "f": [{"a": 0, "b": 1, "c": 5, "v": "1"}]})")),
                 IndexOutOfRange);
    EXPECT_THROW(load_json_file(kCatalogDir / "missing.json"), ParseError);
}

TEST(ElementJson, FormsAndRoundTrip)
{
    const RationalVector x = vec({1, q(-2, 3), 0});
    EXPECT_TRUE(exactly_equal(element_from_json(element_to_json(x), 3), x));
    EXPECT_TRUE(exactly_equal(element_from_json(Json::parse(R"(["1", "-2/3", 0])"), 3), x));
    EXPECT_THROW(element_from_json(Json::parse(R"(["1", "2"])"), 3), ParseError);
    EXPECT_THROW(element_from_json(Json::parse(R"({"x": []})"), 3), ParseError);
}

TEST(RepJson, RoundTripAndValidation)
{
    const auto h = catalog::heisenberg();
    const auto back = rep_from_json(Json::parse(to_json(*h.rep).dump()), h.algebra);
    for (int a = 0; a < 3; ++a) EXPECT_EQ(back.basis_images()[a], h.rep->basis_images()[a]);
    Json bad = to_json(*h.rep);
    bad["basis_images"][2][0][2] = 2.0;
    EXPECT_THROW(rep_from_json(bad, h.algebra), RepresentationError);
}

TEST(ClassificationJson, Fields)
{
    const auto two = catalog::two_eigenvalue();
    const Json j = to_json(classify_pair(two.algebra, two.x, two.y));
    EXPECT_EQ(j["tag"], "OperatorCommuting");
    EXPECT_TRUE(j["u"].is_null());
    EXPECT_EQ(j["derived_dim"], 2);
    EXPECT_EQ(j["derived_abelian"], true);
    EXPECT_TRUE(j["nilpotent"].is_null());
    EXPECT_TRUE(j["rank_one"].is_null());
    EXPECT_EQ(j["S_dim"], 2);

    const auto h = catalog::heisenberg();
    const Json k = to_json(classify_pair(h.algebra, h.x, h.y));
    EXPECT_EQ(k["tag"], "CentralBracket");
    EXPECT_EQ(k["nilpotent"]["class"], 2);
    EXPECT_EQ(k["rank_one"]["n"], Json::parse(R"(["0", "0", "1"])"));

    const auto a = catalog::affine();
    const Json m = to_json(classify_pair(a.algebra, a.x, a.y));
    EXPECT_EQ(m["tag"], "SimultaneousEigenvector");
    EXPECT_EQ(m["u"], "0");
    EXPECT_EQ(m["v"], "1");
}

TEST(ResultJson, ExactAndScalar)
{
    const auto h = catalog::heisenberg();
    const Json j = to_json(bch_closed_form(h.algebra, h.x, h.y));
    EXPECT_EQ(j["method"], "Central");
    EXPECT_EQ(j["exact"], true);
    EXPECT_EQ(j["z_exact"], Json::parse(R"(["1", "1", "1/2"])"));
    EXPECT_TRUE(j["residual_bound"].is_null());

    const auto a = catalog::affine();
    const Json k = to_json(bch_closed_form(a.algebra, a.x, a.y));
    EXPECT_EQ(k["method"], "ScalarF");
    EXPECT_FALSE(k.contains("z_exact"));
    EXPECT_NEAR(k["z"][1].get<double>(), 1 / (1 - std::exp(-1.0)), 1e-15);
    EXPECT_GT(k["residual_bound"].get<double>(), 0);
}

TEST(ErrorJson, JacobiViolationDetail)
{
    // [0,1] = 2, [1,2] = 0, [2,0] = 1: J(0,1,2) picks up a nonzero term.
    const Json doc = Json::parse(R"({"dim": 3, "f": [
        {"a": 0, "b": 1, "c": 2, "v": "1"},
        {"a": 2, "b": 0, "c": 0, "v": "1"}]})");
    try {
        algebra_from_json(doc);
        FAIL() << "expected a JacobiViolation";
    } catch (const JacobiViolation& e) {
        const Json j = to_json(e);
        EXPECT_EQ(j["error"], "JacobiViolation");
        EXPECT_EQ(j["indices"].size(), 4u);
        EXPECT_EQ(j["residual"], e.residual);
        EXPECT_NE(j["residual"], "0");
    }
    try {
        algebra_from_json(Json::parse(R"({"dim": 2, "f": [{"a": 0, "b": 0, "c": 1, "v": "1"}]})"));
        FAIL() << "expected an AntisymmetryViolation";
    } catch (const AntisymmetryViolation& e) {
        EXPECT_EQ(to_json(e)["error"], "AntisymmetryViolation");
    }
}
