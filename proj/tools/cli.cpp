#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <ostream>
#include <string>

#include "seasonwarp/error.hpp"
#include "seasonwarp/fixture.hpp"
#include "seasonwarp/report.hpp"

namespace seasonwarp::cli {

namespace {

using report::RunConfig;
using report::UsageError;

struct Flags {
    std::string input;
    std::string out_dir = "seasonwarp-out";
    std::string variable = "both";
    std::string years;
    std::optional<std::size_t> band;
    std::string normalize = "none";
    bool all_pairs = false;
    bool winsorize = false;
    double fence = 3.0;
    std::uint64_t seed = 42;
    std::string format = "json,csv,svg";
    bool force = false;
    std::string date_col = "date";
    std::string arrivals_col = "arrivals";
    std::string price_col = "modal_price";
    std::string date_format = "iso";
    std::string detrend = "none";
    std::string adf_regression = "constant";
    std::optional<int> max_lag;
    bool dump_matrices = false;
    std::string output;
};

int parse_year(std::string_view text) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw UsageError("--years expects A..B, got '" + std::string(text) + "'");
    }
    return value;
}

std::pair<int, int> parse_years(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int y = parse_year(text);
        return {y, y};
    }
    const int a = parse_year(std::string_view(text).substr(0, dots));
    const int b = parse_year(std::string_view(text).substr(dots + 2));
    if (a > b) throw UsageError("--years range is empty: " + text);
    return {a, b};
}

RunConfig to_config(const Flags& f) {
    RunConfig c;
    c.input_path = f.input;
    c.schema.date_column = f.date_col;
    c.schema.arrivals_column = f.arrivals_col;
    c.schema.price_column = f.price_col;
    c.schema.date_format = f.date_format == "dmy" ? DateFormat::DayMonthYear : DateFormat::Iso;
    if (f.variable == "arrivals") c.variables = {Variable::Arrivals};
    else if (f.variable == "price") c.variables = {Variable::ModalPrice};
    else c.variables = {Variable::Arrivals, Variable::ModalPrice};
    if (!f.years.empty()) c.years = parse_years(f.years);
    c.dtw_options.band_radius = f.band;
    c.dtw_options.normalize_input =
        f.normalize == "zscore" ? dtw::Normalization::ZScore : dtw::Normalization::None;
    c.all_pairs = f.all_pairs;
    c.dump_matrices = f.dump_matrices;
    c.clean.winsorize = f.winsorize;
    c.clean.fence_multiplier = f.fence;
    c.seasonal_method = f.detrend == "moving-average" ? SeasonalMethod::RatioToMovingAverage
                                                     : SeasonalMethod::WeeklyMean;
    if (f.adf_regression == "none") c.adf_regression = AdfRegression::None;
    else if (f.adf_regression == "constant+trend") c.adf_regression = AdfRegression::ConstantTrend;
    else c.adf_regression = AdfRegression::Constant;
    c.adf_max_lag = f.max_lag;
    c.out_dir = f.out_dir;
    c.formats = report::FormatSet::parse(f.format);
    c.force = f.force;
    c.seed = f.seed;
    if (!f.output.empty()) c.fixture_path = f.output;
    return c;
}

report::OutputSet run_fixture(const RunConfig& c, std::filesystem::path& dir) {
    FixtureOptions options;
    options.seed = c.seed;
    const Fixture fx = generate_fixture(options);
    std::filesystem::path target = c.fixture_path.value_or(c.out_dir / "fixture.csv");
    dir = target.parent_path();
    report::OutputSet out;
    out.files[target.filename().string()] = fx.csv;
    return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weekly market series toolkit: cleaning, statistics, seasonal indices and DTW",
                 "seasonwarp"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "", "Read flags from a TOML/INI file; command-line flags win");

    Flags f;
    app.add_option("--input", f.input, "Market CSV (date, arrivals, modal price)");
    app.add_option("--out-dir", f.out_dir, "Output directory")->capture_default_str();
    app.add_option("--variable", f.variable, "Variables to analyse")
        ->check(CLI::IsMember({"arrivals", "price", "both"}))
        ->capture_default_str();
    app.add_option("--years", f.years, "ISO year range A..B used for DTW alignment");
    app.add_option("--band", f.band, "Sakoe-Chiba band radius in weeks");
    app.add_option("--normalize", f.normalize, "Input normalization before DTW")
        ->check(CLI::IsMember({"none", "zscore"}))
        ->capture_default_str();
    app.add_flag("--all-pairs", f.all_pairs, "Align every pair of complete years");
    app.add_flag("--winsorize", f.winsorize, "Clamp outliers to the IQR fences");
    app.add_option("--fence", f.fence, "IQR fence multiplier")->capture_default_str();
    app.add_option("--seed", f.seed, "Fixture RNG seed")->capture_default_str();
    app.add_option("--format", f.format, "Comma-separated subset of json,csv,svg")
        ->capture_default_str();
    app.add_flag("--force", f.force, "Overwrite existing output files");
    app.add_option("--date-col", f.date_col, "Date column name")->capture_default_str();
    app.add_option("--arrivals-col", f.arrivals_col, "Arrivals column name")->capture_default_str();
    app.add_option("--price-col", f.price_col, "Modal price column name")->capture_default_str();
    app.add_option("--date-format", f.date_format, "iso (YYYY-MM-DD) or dmy (DD/MM/YYYY)")
        ->check(CLI::IsMember({"iso", "dmy"}))
        ->capture_default_str();
    app.add_option("--detrend", f.detrend, "Seasonal index method")
        ->check(CLI::IsMember({"none", "moving-average"}))
        ->capture_default_str();
    app.add_option("--adf-regression", f.adf_regression, "Deterministic terms of the ADF test")
        ->check(CLI::IsMember({"none", "constant", "constant+trend"}))
        ->capture_default_str();
    app.add_option("--max-lag", f.max_lag, "ADF maximum lag (default: Schwert rule)")
        ->check(CLI::NonNegativeNumber);
    app.add_flag("--dump-matrices", f.dump_matrices, "Also write DTW cost matrices as CSV");
    app.add_option("--output", f.output, "fixture: CSV path (default <out-dir>/fixture.csv)");

    auto* clean = app.add_subcommand("clean", "Fill gaps and flag outliers");
    auto* stats = app.add_subcommand("stats", "Descriptive statistics and ADF test");
    auto* seasonal = app.add_subcommand("seasonal", "Weekly seasonal indices");
    auto* dtw = app.add_subcommand("dtw", "Year-pair DTW alignment and ranking");
    auto* fixture = app.add_subcommand("fixture", "Write the synthetic test dataset");
    auto* all = app.add_subcommand("report-all", "Run every stage and write a bundle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << "seasonwarp 0.1.0\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        const RunConfig config = to_config(f);
        report::OutputSet outputs;
        std::filesystem::path dir = config.out_dir;
        if (clean->parsed()) outputs = report::run_clean(config);
        else if (stats->parsed()) outputs = report::run_stats(config);
        else if (seasonal->parsed()) outputs = report::run_seasonal(config);
        else if (dtw->parsed()) outputs = report::run_dtw(config);
        else if (fixture->parsed()) outputs = run_fixture(config, dir);
        else if (all->parsed()) outputs = report::run_report_all(config);

        for (const auto& w : outputs.warnings) err << "warning: " << w << "\n";
        report::write_outputs(outputs, dir, config.force);
        out << "wrote " << outputs.files.size() << " file(s) to " << (dir.empty() ? "." : dir.string())
            << "\n";
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace seasonwarp::cli
