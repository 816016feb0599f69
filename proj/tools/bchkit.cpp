// bchkit: closed-form Baker-Campbell-Hausdorff for Lie algebras given by
// structure constants.
//
// Exit codes: 0 ok, 1 malformed input, 2 not a Lie algebra (or bad
// representation), 3 no closed form applies, 4 verification failure.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bchkit/catalog.hpp"
#include "bchkit/fuzz.hpp"
#include "bchkit/integral_series.hpp"
#include "bchkit/io_json.hpp"

namespace fs = std::filesystem;
using namespace bchkit;

namespace {

enum Exit { kOk = 0, kMalformed = 1, kInvalidAlgebra = 2, kNoClosedForm = 3, kVerifyFailed = 4 };


fs::path catalog_dir()
{
    if (const char* env = std::getenv("BCHKIT_CATALOG_DIR"); env && *env) return env;
    return BCHKIT_DEFAULT_CATALOG_DIR;
}

struct Inputs {
    std::string algebra;
    std::string x;
    std::string y;
    std::string rep;
    int degree = 8;
    double tolerance = 1e-8;
    std::string output = "json";
    bool verify = false;
};

struct LoadedAlgebra {
    StructureConstants alg;
    std::optional<fs::path> rep_path;
};

// An existing file, or the name of a sample in the catalog directory.
LoadedAlgebra load_algebra(const std::string& arg)
{
    if (arg.empty()) throw ParseError("--algebra is required");
    fs::path path = arg;
    std::optional<fs::path> rep;
    if (!fs::is_regular_file(path)) {
        const fs::path sample = catalog_dir() / (arg + ".json");
        if (!fs::is_regular_file(sample))
            throw ParseError("no algebra file or catalog sample named \"" + arg + "\" (catalog: " +
                             catalog_dir().string() + ")");
        path = sample;
        if (const fs::path r = catalog_dir() / (arg + ".rep.json"); fs::is_regular_file(r)) rep = r;
    }
    return {algebra_from_json(load_json_file(path)), rep};
}

// A file, a JSON array, "e<k>" for a basis vector, or comma-separated rationals.
RationalVector load_element(const std::string& arg, int dim, const char* which)
{
    if (arg.empty()) throw ParseError(std::string("--") + which + " is required");
    if (fs::is_regular_file(arg)) return element_from_json(load_json_file(arg), dim);
    if (arg.front() == '[' || arg.front() == '{') {
        try {
            return element_from_json(Json::parse(arg), dim);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string(which) + ": " + e.what());
        }
    }
    if (arg.size() > 1 && arg.front() == 'e' && arg.find_first_not_of("0123456789", 1) == std::string::npos) {
        const int k = std::stoi(arg.substr(1));
        if (k >= dim) throw ParseError(std::string(which) + ": basis index out of range");
        return unit_vector(dim, k);
    }
    Json list = Json::array();
    std::stringstream ss(arg);
    for (std::string item; std::getline(ss, item, ',');) list.push_back(item);
    return element_from_json(list, dim);
}

void print(const Json& doc, const std::string& output)
{
    if (output == "human") {
        for (const auto& [k, v] : doc.items()) std::cout << k << ": " << v.dump() << "\n";
    } else {
        std::cout << doc.dump(2) << "\n";
    }
}

int cmd_check(const Inputs& in)
{
    const auto loaded = load_algebra(in.algebra);
    const auto x = load_element(in.x, loaded.alg.dim(), "x");
    const auto y = load_element(in.y, loaded.alg.dim(), "y");
    const auto cls = classify_pair(loaded.alg, x, y);
    Json out = to_json(cls);
    out["center_condition"] = pair_center_condition(loaded.alg, x, y);
    print(out, in.output);
    return cls.tag == CaseTag::NoClosedForm ? kNoClosedForm : kOk;
}

std::optional<MatrixRep> load_rep(const Inputs& in, const LoadedAlgebra& loaded)
{
    if (!in.rep.empty()) return rep_from_json(load_json_file(in.rep), loaded.alg);
    if (loaded.rep_path) return rep_from_json(load_json_file(*loaded.rep_path), loaded.alg);
    return std::nullopt;
}

int cmd_bch(const Inputs& in)
{
    const auto loaded = load_algebra(in.algebra);
    const auto x = load_element(in.x, loaded.alg.dim(), "x");
    const auto y = load_element(in.y, loaded.alg.dim(), "y");
    const auto cls = classify_pair(loaded.alg, x, y);
    if (cls.tag == CaseTag::NoClosedForm) {
        std::cerr << "bchkit: no closed-form condition holds for this pair; use `bchkit oracle` for the "
                     "truncated series and matrix results\n";
        print(Json{{"tag", to_string(cls.tag)}}, in.output);
        return kNoClosedForm;
    }
    BchResult<double> r;
    try {
        r = bch_closed_form<double>(loaded.alg, cls, x, y);
    } catch (const NonConvergence& e) {
        std::cerr << "bchkit: " << e.what() << "\n";
        print(Json{{"tag", to_string(cls.tag)}, {"achieved_bound", e.achieved_bound}}, in.output);
        return kNoClosedForm;
    }
    Json out = {{"tag", to_string(cls.tag)}, {"result", to_json(r)}};
    int code = kOk;
    if (in.verify) {
        const RationalVector series = bch_integral_series(loaded.alg, x, y, GradedTruncation(in.degree));
        const double diff = (r.z - to_real<double>(series)).cwiseAbs().maxCoeff();
        Json v = {{"degree", in.degree},
                  {"tolerance", in.tolerance},
                  {"series", element_to_json(series)["coords"]},
                  {"series_difference", diff}};
        double worst = diff;
        if (const auto rep = load_rep(in, loaded)) {
            const auto m = matrix_bch(*rep, to_real<double>(x), to_real<double>(y));
            const double mdiff = (r.z - m.z).cwiseAbs().maxCoeff();
            v["matrix_difference"] = mdiff;
            worst = std::max(worst, mdiff);
        }
        v["ok"] = worst <= in.tolerance;
        out["verify"] = v;
        if (!(worst <= in.tolerance)) {
            std::cerr << "bchkit: verification failed: difference " << worst << " exceeds tolerance "
                      << in.tolerance << "\n";
            code = kVerifyFailed;
        }
    }
    print(out, in.output);
    return code;
}

int cmd_oracle(const Inputs& in)
{
    const auto loaded = load_algebra(in.algebra);
    const auto x = load_element(in.x, loaded.alg.dim(), "x");
    const auto y = load_element(in.y, loaded.alg.dim(), "y");
    const RationalVector series = bch_integral_series(loaded.alg, x, y, GradedTruncation(in.degree));
    Json out = {{"degree", in.degree},
                {"series", element_to_json(series)["coords"]},
                {"series_real", real_vector_json(to_real<double>(series))}};
    if (const auto rep = load_rep(in, loaded)) {
        const auto m = matrix_bch(*rep, to_real<double>(x), to_real<double>(y));
        out["matrix"] = real_vector_json(m.z);
        out["expansion_residual"] = m.expansion_residual;
        out["difference"] = (m.z - to_real<double>(series)).norm();
    } else {
        out["matrix"] = nullptr;
        out["difference"] = nullptr;
    }
    print(out, in.output);
    return kOk;
}

int cmd_f(double u, double v, int series_degree, const std::string& output)
{
    if (series_degree >= 0) {
        const auto s = f_series(series_degree);
        std::cout << "i\tj\tcoeff\n";
        for (int d = 0; d <= series_degree; ++d)
            for (int j = 0; j <= d; ++j) std::cout << d - j << "\t" << j << "\t" << to_string(s.coeff(d - j, j)) << "\n";
        return kOk;
    }
    const double f = f_scalar(u, v);
    if (output == "tsv") {
        std::cout << "u\tv\tf\n" << Json(u).dump() << "\t" << Json(v).dump() << "\t" << Json(f).dump() << "\n";
    } else {
        print(Json{{"u", u}, {"v", v}, {"f", f}}, output);
    }
    return kOk;
}

int cmd_fuzz(const FuzzConfig& config, const std::string& output)
{
    if (config.n == 0) std::cerr << "bchkit: warning: --n 0, nothing to test\n";
    const auto report = run_fuzz(config);
    print(report.to_json(), output);
    if (!report.ok())
        std::cerr << "bchkit: " << report.failures() << " fuzz instance(s) failed; see \"violations\"\n";
    return report.ok() ? kOk : kVerifyFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Closed-form Baker-Campbell-Hausdorff for Lie algebras given by structure constants"};
    app.require_subcommand(1);

    Inputs in;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--algebra", in.algebra, "algebra JSON file or catalog sample name")->required();
        sub->add_option("--x", in.x, "element X (file, JSON array, e<k> or comma-separated rationals)")->required();
        sub->add_option("--y", in.y, "element Y")->required();
        sub->add_option("--output", in.output, "json or human")->check(CLI::IsMember({"json", "human"}));
    };

    auto* check = app.add_subcommand("check", "classify a pair (X, Y)");
    add_common(check);

    auto* bch = app.add_subcommand("bch", "ln(e^X e^Y) by the strongest closed form");
    add_common(bch);
    bch->add_flag("--verify", in.verify, "compare against the truncated series oracle");
    bch->add_option("--degree", in.degree, "oracle truncation degree")->check(CLI::Range(2, 64));
    bch->add_option("--tolerance", in.tolerance, "allowed max-norm difference")->check(CLI::PositiveNumber);
    bch->add_option("--rep", in.rep, "matrix representation JSON; also compared when verifying");

    auto* oracle = app.add_subcommand("oracle", "truncated series and matrix exp/log results");
    add_common(oracle);
    oracle->add_option("--degree", in.degree, "truncation degree")->check(CLI::Range(2, 64));
    oracle->add_option("--rep", in.rep, "matrix representation JSON");

    double u = 0, v = 0;
    int series_degree = -1;
    auto* f = app.add_subcommand("f", "evaluate f(u, v) or print its Taylor coefficients");
    f->add_option("--u", u, "first argument");
    f->add_option("--v", v, "second argument");
    f->add_option("--series", series_degree, "print exact coefficients through this total degree as TSV")
        ->check(CLI::Range(0, 200));
    f->add_option("--output", in.output, "json, tsv or human")->check(CLI::IsMember({"json", "tsv", "human"}));

    FuzzConfig fuzz_config;
    std::vector<std::string> families;
    bool no_slopes = false;
    auto* fuzz = app.add_subcommand("fuzz", "randomized closed form vs oracle conformance");
    fuzz->add_option("--seed", fuzz_config.seed, "RNG seed");
    fuzz->add_option("--n", fuzz_config.n, "instances per family")->check(CLI::NonNegativeNumber);
    fuzz->add_option("--family", families, "rank-one, case1, abelian-derived, catalog (repeatable)");
    fuzz->add_option("--degree", fuzz_config.degree, "oracle truncation degree")->check(CLI::Range(2, 32));
    fuzz->add_option("--tolerance", fuzz_config.tolerance, "allowed max-norm difference")
        ->check(CLI::PositiveNumber);
    fuzz->add_option("--threads", fuzz_config.threads, "worker threads (0 = all cores)");
    fuzz->add_flag("--no-slopes", no_slopes, "skip the scaling-order measurement");
    fuzz->add_flag("--inject-bug", fuzz_config.inject_bug, "use 1/11 for the first-order coefficient of f");
    fuzz->add_option("--output", in.output, "json or human")->check(CLI::IsMember({"json", "human"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kMalformed;
    }

    try {
        if (*check) return cmd_check(in);
        if (*bch) return cmd_bch(in);
        if (*oracle) return cmd_oracle(in);
        if (*f) return cmd_f(u, v, series_degree, in.output);
        if (*fuzz) {
            if (!families.empty()) {
                fuzz_config.families.clear();
                for (const auto& name : families) fuzz_config.families.push_back(parse_fuzz_family(name));
            }
            fuzz_config.slopes = !no_slopes;
            return cmd_fuzz(fuzz_config, in.output);
        }
    } catch (const ValidationError& e) {
        std::cerr << to_json(e).dump() << "\n";
        return kInvalidAlgebra;
    } catch (const NoClosedForm& e) {
        std::cerr << "bchkit: " << e.what() << "\n";
        return kNoClosedForm;
    } catch (const ExpansionResidualTooLarge& e) {
        std::cerr << "bchkit: " << e.what() << "\n";
        return kVerifyFailed;
    } catch (const Error& e) {
        std::cerr << "bchkit: " << e.what() << "\n";
        return kMalformed;
    } catch (const std::exception& e) {
        std::cerr << "bchkit: " << e.what() << "\n";
        return kMalformed;
    }
    return kMalformed;
}
