#ifndef BCHKIT_FUZZ_HPP
#define BCHKIT_FUZZ_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bchkit/io_json.hpp"

namespace bchkit {

enum class FuzzFamily { RankOne, Case1, AbelianDerived, Catalog };

std::string to_string(FuzzFamily family);
/// "rank-one", "case1", "abelian-derived", "catalog". Throws ParseError.
FuzzFamily parse_fuzz_family(const std::string& name);

struct FuzzConfig {
    std::vector<FuzzFamily> families{FuzzFamily::RankOne};
    std::uint64_t seed = 0;
    /// Instances per family.
    int n = 100;
    /// Truncation degree of the series oracle.
    int degree = 8;
    /// Largest allowed max-norm difference between closed form and oracle.
    double tolerance = 1e-8;
    /// Measure the scaling slope over eps = 2^-3 .. 2^-7 (five extra oracle runs).
    bool slopes = true;
    /// Use 1/11 for the first-order coefficient of f in every closed form.
    bool inject_bug = false;
    /// 0 picks the hardware concurrency.
    int threads = 0;

    double slope_threshold() const { return degree + 0.5; }
};

struct FuzzRecord {
    FuzzFamily family;
    int index = 0;
    CaseTag tag = CaseTag::NoClosedForm;
    int dim = 0;
    /// max-norm difference from the series oracle (and from matrix_bch when a
    /// representation exists).
    double error = 0;
    /// Log-log slope of the truncation error; absent when the truncation is exact.
    std::optional<double> slope;
    bool hierarchy_sound = true;
    bool ok = true;
    std::string note;
    /// Enough to rerun the instance.
    Json replay;
};

struct FuzzReport {
    FuzzConfig config;
    std::vector<FuzzRecord> records;

    int failures() const;
    double max_error() const;
    std::optional<double> min_slope() const;
    bool ok() const { return failures() == 0; }

    /// Deterministic summary; offending instances are included in full.
    Json to_json() const;
};

/// Runs config.n instances of every family. Instance i of a family draws from
/// instance_rng(seed ^ family salt, i), so results are independent of thread
/// count and order of completion.
FuzzReport run_fuzz(const FuzzConfig& config);

/// Slope of log(error) against log(eps) by least squares, from errors at
/// eps = 2^-3 .. 2^-7; nullopt when any error is below the precision floor.
std::optional<double> scaling_slope(const std::vector<HighPrecision>& errors);

/// classify_pair's tag is consistent with the weaker detectors.
bool hierarchy_sound(const StructureConstants& alg, const RationalVector& x, const RationalVector& y,
                     const CaseClassification& cls);

} // namespace bchkit

#endif
