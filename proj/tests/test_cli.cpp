#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

const std::string kCli = BCHKIT_CLI_PATH;
const fs::path kData = BCHKIT_TEST_DATA_DIR;

struct Run {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Run run(const std::string& args, const std::string& env = {})
{
    static int counter = 0;
    const fs::path dir = fs::temp_directory_path();
    const std::string tag = std::to_string(::getpid()) + "_" + std::to_string(counter++);
    const fs::path out = dir / ("bchkit_out_" + tag), err = dir / ("bchkit_err_" + tag);
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" + kCli + "' " + args + " >'" + out.string() +
                            "' 2>'" + err.string() + "'";
    const int status = std::system(cmd.c_str());
    Run r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
    fs::remove(out);
    fs::remove(err);
    return r;
}

std::string data(const std::string& name) { return "'" + (kData / name).string() + "'"; }

} // namespace

TEST(CliCheck, CatalogSamples)
{
    const auto r = run("check --algebra heisenberg --x e0 --y e1");
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["tag"], "CentralBracket");
    EXPECT_EQ(j["center_condition"], true);

    const auto s = run("check --algebra sl2 --x e0 --y e1");
    EXPECT_EQ(s.code, 3);
    EXPECT_EQ(Json::parse(s.out)["tag"], "NoClosedForm");

    const auto h = run("check --algebra two_eigenvalue --x 1,2,0,0 --y 0,0,1,1 --output human");
    EXPECT_EQ(h.code, 0);
    EXPECT_NE(h.out.find("OperatorCommuting"), std::string::npos);
}

TEST(CliCheck, InlineElementForms)
{
    const auto r = run("check --algebra affine --x '{\"coords\": [\"1\", \"0\"]}' --y '[\"0\", \"1/2\"]'");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(Json::parse(r.out)["tag"], "SimultaneousEigenvector");
}

TEST(CliCheck, MalformedInputs)
{
    EXPECT_EQ(run("check --algebra " + data("corrupted.json") + " --x e0 --y e1").code, 1);
    EXPECT_EQ(run("check --algebra no_such_sample --x e0 --y e1").code, 1);
    EXPECT_EQ(run("check --algebra heisenberg --x 1,2 --y e1").code, 1);
    EXPECT_EQ(run("check --algebra heisenberg --x e7 --y e1").code, 1);
    EXPECT_EQ(run("check --algebra heisenberg --x e0 --y e1 --bogus").code, 1);
    EXPECT_EQ(run("").code, 1);
}

TEST(CliCheck, InvalidAlgebraReportsJson)
{
    const auto r = run("check --algebra " + data("jacobi_violation.json") + " --x e0 --y e1");
    EXPECT_EQ(r.code, 2);
    const Json j = Json::parse(r.err);
    EXPECT_EQ(j["error"], "JacobiViolation");
    EXPECT_EQ(j["indices"].size(), 4u);
}

TEST(CliBch, ExactCentral)
{
    const auto r = run("bch --algebra heisenberg --x e0 --y e1");
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["result"]["method"], "Central");
    EXPECT_EQ(j["result"]["z_exact"], Json::parse(R"(["1", "1", "1/2"])"));
}

TEST(CliBch, NoClosedForm)
{
    const auto r = run("bch --algebra sl2 --x e0 --y e1");
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("oracle"), std::string::npos);
}

TEST(CliBch, NonConvergenceExitsThree)
{
    const auto r = run("bch --algebra two_eigenvalue --x 4,1,0,0 --y 1/2,0,1,1");
    EXPECT_EQ(r.code, 3);
    EXPECT_TRUE(Json::parse(r.out).contains("achieved_bound"));
}

TEST(CliBch, VerifyAgainstTruncatedSeries)
{
    // At |X| = |Y| = 1 the degree-9 series term alone is about 8e-7.
    const auto low = run("bch --algebra affine --x e0 --y e1 --verify --degree 8 --tolerance 1e-8");
    EXPECT_EQ(low.code, 4);
    const Json j = Json::parse(low.out);
    EXPECT_EQ(j["verify"]["ok"], false);
    EXPECT_GT(j["verify"]["series_difference"].get<double>(), 1e-7);
    EXPECT_LT(j["verify"]["matrix_difference"].get<double>(), 1e-12);

    const auto high = run("bch --algebra affine --x e0 --y e1 --verify --degree 12 --tolerance 1e-8");
    EXPECT_EQ(high.code, 0) << high.err;

    const auto small = run("bch --algebra affine --x 1/4,0 --y 0,1/4 --verify --degree 8 --tolerance 1e-8");
    EXPECT_EQ(small.code, 0) << small.err;
}

TEST(CliOracle, SeriesAndMatrix)
{
    const auto r = run("oracle --algebra sl2 --x 1/4,0,0 --y 0,1/4,0 --degree 10");
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["degree"], 10);
    EXPECT_LT(j["difference"].get<double>(), 1e-8);
    const auto n = run("oracle --algebra commutator_model --x e0 --y e1 --degree 4");
    ASSERT_EQ(n.code, 0);
    EXPECT_TRUE(Json::parse(n.out)["matrix"].is_null());
}

TEST(CliF, ValueAndSeries)
{
    const auto r = run("f --u 1 --v -1");
    ASSERT_EQ(r.code, 0);
    EXPECT_NEAR(Json::parse(r.out)["f"].get<double>(), 0.46211715726000974, 1e-16);
    const auto s = run("f --series 2");
    ASSERT_EQ(s.code, 0);
    EXPECT_EQ(s.out, "i\tj\tcoeff\n0\t0\t1/2\n1\t0\t1/12\n0\t1\t1/12\n2\t0\t0\n1\t1\t1/24\n0\t2\t0\n");
    EXPECT_EQ(run("f --u 400 --v 400").code, 1);
}

TEST(CliFuzz, RankOneSeed42)
{
    const auto r = run("fuzz --seed 42 --n 200 --family rank-one");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto again = run("fuzz --seed 42 --n 200 --family rank-one");
    EXPECT_EQ(again.out, r.out);
}

TEST(CliFuzz, InjectedBugAndEmptyRun)
{
    EXPECT_EQ(run("fuzz --seed 1 --n 5 --inject-bug --no-slopes").code, 4);
    const auto empty = run("fuzz --seed 1 --n 0");
    EXPECT_EQ(empty.code, 0);
    EXPECT_NE(empty.err.find("warning"), std::string::npos);
    EXPECT_EQ(run("fuzz --family lattice").code, 1);
}

TEST(CliCatalog, DirectoryOverride)
{
    const std::string env = "BCHKIT_CATALOG_DIR='" + (kData / "alt_catalog").string() + "'";
    const auto r = run("check --algebra line --x e0 --y e1", env);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(Json::parse(r.out)["tag"], "SimultaneousEigenvector");
    EXPECT_EQ(run("check --algebra line --x e0 --y e1").code, 1);
    EXPECT_EQ(run("check --algebra heisenberg --x e0 --y e1", env).code, 1);
}
