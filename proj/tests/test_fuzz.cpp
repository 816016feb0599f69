#include <cmath>

#include <gtest/gtest.h>

#include "bchkit/fuzz.hpp"

using namespace bchkit;

namespace {

FuzzConfig small(std::vector<FuzzFamily> families, int n)
{
    FuzzConfig c;
    c.families = std::move(families);
    c.seed = 9;
    c.n = n;
    c.threads = 1;
    return c;
}

} // namespace

TEST(Fuzz, FamilyNames)
{
    for (auto f : {FuzzFamily::RankOne, FuzzFamily::Case1, FuzzFamily::AbelianDerived, FuzzFamily::Catalog})
        EXPECT_EQ(parse_fuzz_family(to_string(f)), f);
    EXPECT_THROW(parse_fuzz_family("lattice"), ParseError);
}

TEST(Fuzz, DeterministicAcrossThreadCounts)
{
    auto c = small({FuzzFamily::RankOne, FuzzFamily::Case1}, 12);
    const std::string one = run_fuzz(c).to_json().dump();
    c.threads = 3;
    EXPECT_EQ(run_fuzz(c).to_json().dump(), one);
    c.seed = 10;
    EXPECT_NE(run_fuzz(c).to_json().dump(), one);
}

TEST(Fuzz, AllFamiliesPass)
{
    const auto r = run_fuzz(small({FuzzFamily::RankOne, FuzzFamily::Case1, FuzzFamily::AbelianDerived,
                                   FuzzFamily::Catalog},
                                  10));
    EXPECT_EQ(r.records.size(), 40u);
    EXPECT_TRUE(r.ok()) << r.to_json().dump(2);
    EXPECT_LT(r.max_error(), 1e-8);
    for (const auto& rec : r.records) EXPECT_TRUE(rec.hierarchy_sound);
    if (auto s = r.min_slope()) EXPECT_GT(*s, 8.5);
}

TEST(Fuzz, InjectedBugIsCaught)
{
    auto c = small({FuzzFamily::RankOne}, 10);
    c.inject_bug = true;
    const auto r = run_fuzz(c);
    EXPECT_FALSE(r.ok());
    EXPECT_GT(r.failures(), 5);
    const Json j = r.to_json();
    ASSERT_FALSE(j["violations"].empty());
    const Json& v = j["violations"][0];
    EXPECT_TRUE(v.contains("algebra") && v.contains("x") && v.contains("y") && v.contains("index"));
}

TEST(Fuzz, EmptyRun)
{
    const auto r = run_fuzz(small({FuzzFamily::RankOne}, 0));
    EXPECT_TRUE(r.records.empty());
    EXPECT_TRUE(r.ok());
    EXPECT_FALSE(r.min_slope());
}

TEST(ScalingSlope, SyntheticPowerLaw)
{
    std::vector<HighPrecision> errors;
    for (int k = 3; k <= 7; ++k) errors.push_back(3 * pow(HighPrecision(2), -9 * k));
    const auto s = scaling_slope(errors);
    ASSERT_TRUE(s);
    EXPECT_NEAR(*s, 9.0, 1e-12);
    errors[4] = 0;
    EXPECT_FALSE(scaling_slope(errors));
}
