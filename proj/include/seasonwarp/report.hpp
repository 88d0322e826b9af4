#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seasonwarp/adf.hpp"
#include "seasonwarp/cleaning.hpp"
#include "seasonwarp/dtw.hpp"
#include "seasonwarp/ingest.hpp"
#include "seasonwarp/json.hpp"
#include "seasonwarp/seasonal.hpp"
#include "seasonwarp/stats.hpp"

namespace seasonwarp::report {

/// Invalid invocation (bad flag combination, too few years, output files
/// already present without --force). The CLI exits with code 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OutputConflictError : public UsageError {
public:
    using UsageError::UsageError;
};

struct FormatSet {
    bool json = true;
    bool csv = true;
    bool svg = true;

    /// Parses "json,csv,svg" (any subset, any order).
    static FormatSet parse(std::string_view list);
    [[nodiscard]] bool allows(const std::filesystem::path& file) const;
};

struct RunConfig {
    std::filesystem::path input_path;
    CsvSchema schema;
    std::vector<Variable> variables{Variable::Arrivals, Variable::ModalPrice};
    /// ISO years aligned by the DTW stage (inclusive); all complete years if absent.
    std::optional<std::pair<int, int>> years;
    dtw::DtwOptions dtw_options;
    /// Radius of the robustness re-run compared against the unbanded ranking
    /// (overridden by --band).
    std::size_t band_check_radius = 4;
    bool all_pairs = false;
    bool dump_matrices = false;
    CleanOptions clean;
    SeasonalMethod seasonal_method = SeasonalMethod::WeeklyMean;
    AdfRegression adf_regression = AdfRegression::Constant;
    std::optional<int> adf_max_lag;
    std::filesystem::path out_dir = "seasonwarp-out";
    FormatSet formats;
    bool force = false;
    std::uint64_t seed = 42;
    /// fixture only: explicit CSV path (defaults to <out_dir>/fixture.csv).
    std::optional<std::filesystem::path> fixture_path;
};

struct DtwPair {
    dtw::YearPair pair;
    std::size_t first_length = 0;
    std::size_t second_length = 0;
    double first_min = 0, first_max = 0, second_min = 0, second_max = 0;
    dtw::DtwResult result;

    friend bool operator==(const DtwPair&, const DtwPair&) = default;
};

struct BandCheck {
    std::size_t radius = 4;
    std::vector<int> unbanded_ranks;
    std::vector<int> banded_ranks;
    bool rank_order_changed = false;

    friend bool operator==(const BandCheck&, const BandCheck&) = default;
};

struct DtwAnalysis {
    std::vector<DtwPair> pairs;
    dtw::PairRanking ranking;
    std::optional<BandCheck> band_check;
    std::vector<int> skipped_years;

    friend bool operator==(const DtwAnalysis&, const DtwAnalysis&) = default;
};

struct VariableSection {
    Variable variable = Variable::ModalPrice;
    CleaningReport cleaning;
    stats::DescriptiveSummary summary;
    SeasonalIndexTable seasonal;
    DtwAnalysis dtw;

    friend bool operator==(const VariableSection&, const VariableSection&) = default;
};

/// Every analysis result of one run, in variable order.
struct AnalysisBundle {
    std::vector<VariableSection> variables;
    /// ADF on log differences of the cleaned modal price series.
    std::optional<AdfResult> adf;

    friend bool operator==(const AnalysisBundle&, const AnalysisBundle&) = default;
};

void to_json(Json& j, const DtwPair& p);
void from_json(const Json& j, DtwPair& p);
void to_json(Json& j, const BandCheck& b);
void from_json(const Json& j, BandCheck& b);
void to_json(Json& j, const DtwAnalysis& a);
void from_json(const Json& j, DtwAnalysis& a);
void to_json(Json& j, const VariableSection& s);
void from_json(const Json& j, VariableSection& s);
void to_json(Json& j, const AnalysisBundle& b);
void from_json(const Json& j, AnalysisBundle& b);

/// Files produced by a command, keyed by path relative to the output
/// directory, plus warnings for stderr. Nothing touches the disk until
/// write_outputs.
struct OutputSet {
    std::map<std::string, std::string> files;
    std::vector<std::string> warnings;

    void add(const FormatSet& formats, const std::string& name, std::string content);
};

/// Writes every file under `out_dir`, creating directories. Throws
/// OutputConflictError before writing anything when a file exists and
/// `force` is false; IoError on write failures.
void write_outputs(const OutputSet& outputs, const std::filesystem::path& out_dir, bool force);

/// Consecutive-year (or all-pairs) alignment of a cleaned series over the
/// configured year range. Years that are not complete are skipped and listed.
/// Throws UsageError when fewer than two complete years are selected.
[[nodiscard]] DtwAnalysis analyse_dtw(const WeeklySeries& cleaned, const RunConfig& config);

[[nodiscard]] AnalysisBundle analyse(const std::vector<WeeklyObservation>& observations,
                                     const RunConfig& config);

/// Shortest decimal text that round-trips to the same double.
[[nodiscard]] std::string format_number(double value);

/// Human-readable p-value: "<1e-16" below that floor, else the exact value.
[[nodiscard]] std::string format_p_value(double p);

[[nodiscard]] OutputSet run_clean(const RunConfig& config);
[[nodiscard]] OutputSet run_stats(const RunConfig& config);
[[nodiscard]] OutputSet run_seasonal(const RunConfig& config);
[[nodiscard]] OutputSet run_dtw(const RunConfig& config);
[[nodiscard]] OutputSet run_report_all(const RunConfig& config);

}  // namespace seasonwarp::report
