#include "seasonwarp/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <system_error>

#include "seasonwarp/csv.hpp"
#include "seasonwarp/error.hpp"
#include "seasonwarp/svg.hpp"

namespace seasonwarp::report {

namespace fs = std::filesystem;

namespace {

constexpr const char* kGenerator = "seasonwarp 0.1.0";

std::string key(Variable v) { return std::string(to_string(v)); }

std::string pretty(Variable v) { return v == Variable::Arrivals ? "Arrivals" : "Modal price"; }

std::string unit(Variable v) { return v == Variable::Arrivals ? "quintals" : "price per quintal"; }

struct CleanedVariable {
    Variable variable;
    CleanedSeries cleaned;
};

std::vector<CleanedVariable> clean_all(const std::vector<WeeklyObservation>& observations,
                                       const RunConfig& config) {
    std::vector<CleanedVariable> out;
    for (const Variable v : config.variables) {
        out.push_back({v, clean_series(build_weekly_series(observations, v), config.clean)});
    }
    return out;
}

std::vector<WeeklyObservation> load(const RunConfig& config) {
    if (config.input_path.empty()) throw UsageError("--input is required");
    return read_market_csv(config.input_path, config.schema);
}

Json run_metadata(const RunConfig& config, std::string_view figure) {
    return Json{
        {"generator", kGenerator},
        {"figure", figure},
        {"input", config.input_path.filename().string()},
        {"dtw_options", config.dtw_options},
        {"seasonal_method", to_string(config.seasonal_method)},
        {"fence_multiplier", config.clean.fence_multiplier},
        {"winsorize", config.clean.winsorize},
    };
}

std::vector<double> prepared(std::span<const double> values, const dtw::DtwOptions& options) {
    if (options.normalize_input == dtw::Normalization::ZScore) return dtw::zscore(values);
    return {values.begin(), values.end()};
}

std::string matrix_csv(const dtw::Matrix& m) {
    std::string out;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j > 0) out.push_back(',');
            out += std::isfinite(m(i, j)) ? format_number(m(i, j)) : std::string("inf");
        }
        out.push_back('\n');
    }
    return out;
}

std::string week_ending_text(WeekKey w) {
    const std::chrono::year_month_day ymd{week_ending(w)};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

double fractional_year(WeekKey w) {
    return w.iso_year + (w.iso_week - 0.5) / weeks_in_iso_year(w.iso_year);
}

void add_clean_outputs(OutputSet& out, const RunConfig& config,
                       const std::vector<CleanedVariable>& vars) {
    Json reports = Json::object();
    for (const auto& cv : vars) {
        std::string text = csv::row({"iso_year", "iso_week", "week_ending", "value", "flag"});
        for (const auto& p : cv.cleaned.series.points()) {
            text += csv::row({std::to_string(p.week.iso_year), std::to_string(p.week.iso_week),
                              week_ending_text(p.week), format_number(p.value),
                              to_string(p.flag)});
        }
        out.add(config.formats, "cleaned_" + key(cv.variable) + ".csv", std::move(text));
        reports[key(cv.variable)] = cv.cleaned.report;
    }
    out.add(config.formats, "cleaning_report.json", dump(reports));
}

std::optional<AdfResult> price_adf(const std::vector<CleanedVariable>& vars, const RunConfig& config) {
    for (const auto& cv : vars) {
        if (cv.variable != Variable::ModalPrice) continue;
        const auto values = cv.cleaned.series.values();
        return adf_test(log_diff(values), config.adf_max_lag, config.adf_regression);
    }
    return std::nullopt;
}

void add_stats_outputs(OutputSet& out, const RunConfig& config,
                       const std::vector<std::pair<Variable, stats::DescriptiveSummary>>& summaries,
                       const std::optional<AdfResult>& adf) {
    Json by_var = Json::object();
    for (const auto& [v, s] : summaries) by_var[key(v)] = s;
    Json doc{
        {"kurtosis_convention", "excess"},
        {"std_convention", "sample (n-1)"},
        {"quantile_method", "linear interpolation, h = (n-1)q"},
        {"summaries", by_var},
        {"adf_log_price_diff", adf ? Json(*adf) : Json(nullptr)},
    };
    out.add(config.formats, "stats.json", dump(doc));

    const stats::DescriptiveSummary* arrivals = nullptr;
    const stats::DescriptiveSummary* price = nullptr;
    for (const auto& [v, s] : summaries) (v == Variable::Arrivals ? arrivals : price) = &s;
    auto cell = [](const stats::DescriptiveSummary* s, auto field) -> std::string {
        return s ? field(*s) : std::string();
    };
    using S = stats::DescriptiveSummary;
    struct Row {
        const char* metric;
        std::string (*get)(const S&);
    };
    const Row rows[] = {
        {"count", [](const S& s) { return std::to_string(s.count); }},
        {"mean", [](const S& s) { return format_number(s.mean); }},
        {"std", [](const S& s) { return format_number(s.std); }},
        {"cv_percent", [](const S& s) { return format_number(s.cv_percent); }},
        {"skewness", [](const S& s) { return format_number(s.skewness); }},
        {"kurtosis_excess", [](const S& s) { return format_number(s.kurtosis_excess); }},
        {"min", [](const S& s) { return format_number(s.min); }},
        {"p25", [](const S& s) { return format_number(s.p25); }},
        {"median", [](const S& s) { return format_number(s.median); }},
        {"p75", [](const S& s) { return format_number(s.p75); }},
        {"max", [](const S& s) { return format_number(s.max); }},
        {"jb_statistic", [](const S& s) { return format_number(s.jb_statistic); }},
        {"jb_p_value", [](const S& s) { return format_p_value(s.jb_p_value); }},
    };
    std::string text = csv::row({"metric", "arrivals", "modal_price"});
    for (const auto& r : rows) {
        text += csv::row({r.metric, cell(arrivals, r.get), cell(price, r.get)});
    }
    out.add(config.formats, "stats.csv", std::move(text));
}

svg::ChartSpec seasonal_chart(const std::vector<SeasonalIndexTable>& tables) {
    svg::ChartSpec chart;
    chart.title = "Weekly seasonal index (base 100)";
    chart.x_label = "ISO week";
    chart.y_label = "index";
    chart.reference_y = 100.0;
    for (const auto& t : tables) {
        svg::LineSeries s;
        s.label = pretty(t.variable);
        for (const auto& e : t.entries) {
            s.x.push_back(e.iso_week);
            s.y.push_back(e.index);
        }
        chart.series.push_back(std::move(s));
    }
    return chart;
}

void add_seasonal_outputs(OutputSet& out, const RunConfig& config,
                          const std::vector<SeasonalIndexTable>& tables) {
    Json by_var = Json::object();
    for (const auto& t : tables) {
        std::string text = csv::row({"iso_week", "index", "support"});
        for (const auto& e : t.entries) {
            text += csv::row({std::to_string(e.iso_week), format_number(e.index),
                              std::to_string(e.support)});
        }
        out.add(config.formats, "seasonal_" + key(t.variable) + ".csv", std::move(text));
        by_var[key(t.variable)] = t;
        if (!normalization_holds(t)) {
            out.warnings.push_back("seasonal index for " + key(t.variable) +
                                   " does not average to 100 (weighted mean " +
                                   format_number(index_weighted_mean(t)) + ")");
        }

        Json meta = run_metadata(config, "seasonal index");
        meta["variable"] = key(t.variable);
        meta["method"] = to_string(t.method);
        out.add(config.formats, "seasonal_" + key(t.variable) + ".svg",
                svg::line_chart(seasonal_chart({t}), meta));
    }
    out.add(config.formats, "seasonal.json", dump(Json{{"tables", by_var}}));
    if (!tables.empty()) {
        Json meta = run_metadata(config, "seasonal index, all variables");
        meta["method"] = to_string(tables.front().method);
        out.add(config.formats, "seasonal.svg", svg::line_chart(seasonal_chart(tables), meta));
    }
}

void add_dtw_outputs(OutputSet& out, const RunConfig& config, Variable variable,
                     const WeeklySeries& cleaned, const DtwAnalysis& analysis) {
    const std::string var = key(variable);
    out.add(config.formats, "dtw_" + var + ".json", dump(Json(analysis)));

    std::string table = csv::row({"year_pair", "obs_first", "obs_second", "range_first",
                                  "range_second", "total_cost", "mean_cost", "path_length",
                                  "rank"});
    for (std::size_t k = 0; k < analysis.pairs.size(); ++k) {
        const auto& p = analysis.pairs[k];
        const auto& r = analysis.ranking.entries[k];
        table += csv::row({dtw::to_string(p.pair), std::to_string(p.first_length),
                           std::to_string(p.second_length),
                           format_number(p.first_min) + ".." + format_number(p.first_max),
                           format_number(p.second_min) + ".." + format_number(p.second_max),
                           format_number(r.total_cost), format_number(r.mean_cost),
                           std::to_string(r.path_length), std::to_string(r.rank)});
    }
    out.add(config.formats, "dtw_" + var + "_ranking.csv", std::move(table));

    for (const auto& p : analysis.pairs) {
        const auto x = prepared(slice_year(cleaned, p.pair.first).values, config.dtw_options);
        const auto y = prepared(slice_year(cleaned, p.pair.second).values, config.dtw_options);
        const dtw::Matrix d = dtw::local_distance_matrix(x, y, config.dtw_options.local_metric);
        const dtw::Matrix g = dtw::cumulative_cost(d, config.dtw_options.band_radius);
        const std::string stem =
            var + "_" + std::to_string(p.pair.first) + "_" + std::to_string(p.pair.second);
        Json meta = run_metadata(config, "dtw alignment");
        meta["variable"] = var;
        meta["pair"] = p.pair;
        out.add(config.formats, "dtw_" + stem + ".svg",
                svg::dtw_pair_plot(pretty(variable) + ": " + dtw::to_string(p.pair), g, p.result,
                                   std::to_string(p.pair.first), std::to_string(p.pair.second),
                                   meta));
        if (config.dump_matrices) {
            out.add(config.formats, "matrices/" + stem + "_distance.csv", matrix_csv(d));
            out.add(config.formats, "matrices/" + stem + "_cumulative.csv", matrix_csv(g));
        }
    }
}

std::string weekly_trends_svg(const RunConfig& config, const std::vector<CleanedVariable>& vars) {
    std::vector<svg::ChartSpec> charts;
    for (const auto& cv : vars) {
        svg::ChartSpec chart;
        chart.title = pretty(cv.variable) + " by week";
        chart.x_label = "ISO year";
        chart.y_label = unit(cv.variable);
        svg::LineSeries s;
        s.label = pretty(cv.variable);
        for (const auto& p : cv.cleaned.series.points()) {
            s.x.push_back(fractional_year(p.week));
            s.y.push_back(p.value);
        }
        chart.series.push_back(std::move(s));
        charts.push_back(std::move(chart));
    }
    return svg::stacked_charts(charts, run_metadata(config, "weekly trends"));
}

}  // namespace

FormatSet FormatSet::parse(std::string_view list) {
    FormatSet f{false, false, false};
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t end = std::min(list.find(',', start), list.size());
        const std::string_view item = list.substr(start, end - start);
        if (item == "json") f.json = true;
        else if (item == "csv") f.csv = true;
        else if (item == "svg") f.svg = true;
        else throw UsageError("unknown output format '" + std::string(item) + "'");
        start = end + 1;
    }
    return f;
}

bool FormatSet::allows(const fs::path& file) const {
    const auto ext = file.extension().string();
    if (ext == ".json") return json;
    if (ext == ".csv") return csv;
    if (ext == ".svg") return svg;
    return true;
}

void OutputSet::add(const FormatSet& formats, const std::string& name, std::string content) {
    if (formats.allows(name)) files[name] = std::move(content);
}

void write_outputs(const OutputSet& outputs, const fs::path& out_dir, bool force) {
    if (!force) {
        std::vector<std::string> existing;
        for (const auto& [name, content] : outputs.files) {
            std::error_code ec;
            if (fs::exists(out_dir / name, ec)) existing.push_back((out_dir / name).string());
        }
        if (!existing.empty()) {
            std::string msg = "refusing to overwrite existing output (use --force):";
            for (std::size_t k = 0; k < existing.size() && k < 5; ++k) msg += " " + existing[k];
            if (existing.size() > 5) msg += " and " + std::to_string(existing.size() - 5) + " more";
            throw OutputConflictError(msg);
        }
    }
    for (const auto& [name, content] : outputs.files) {
        const fs::path target = out_dir / name;
        std::error_code ec;
        if (!target.parent_path().empty()) fs::create_directories(target.parent_path(), ec);
        if (ec) throw IoError("cannot create directory '" + target.parent_path().string() + "': " + ec.message());
        std::ofstream f(target, std::ios::binary | std::ios::trunc);
        f << content;
        f.close();
        if (!f) throw IoError("cannot write '" + target.string() + "'");
    }
}

std::string format_number(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, ptr);
}

std::string format_p_value(double p) {
    if (p < 1e-16) return "<1e-16";
    return format_number(p);
}

DtwAnalysis analyse_dtw(const WeeklySeries& cleaned, const RunConfig& config) {
    DtwAnalysis analysis;
    if (cleaned.empty()) throw UsageError("dtw: series is empty");

    const auto complete = complete_years(cleaned);
    int first = cleaned.points().front().week.iso_year;
    int last = cleaned.points().back().week.iso_year;
    if (config.years) {
        first = config.years->first;
        last = config.years->second;
    }
    std::vector<int> usable;
    for (int y = first; y <= last; ++y) {
        if (std::binary_search(complete.begin(), complete.end(), y)) usable.push_back(y);
        else analysis.skipped_years.push_back(y);
    }
    if (usable.size() < 2) {
        throw UsageError("dtw needs at least two complete ISO years in " + std::to_string(first) +
                         ".." + std::to_string(last) + ", found " + std::to_string(usable.size()));
    }

    std::vector<dtw::YearPair> pairs;
    for (std::size_t a = 0; a < usable.size(); ++a) {
        for (std::size_t b = a + 1; b < usable.size(); ++b) {
            if (config.all_pairs || usable[b] == usable[a] + 1) pairs.push_back({usable[a], usable[b]});
        }
    }
    if (pairs.empty()) throw UsageError("dtw: no consecutive pair of complete years to align");

    std::vector<std::pair<dtw::YearPair, dtw::DtwResult>> banded, unbanded;
    const std::size_t check_radius =
        config.dtw_options.band_radius.value_or(config.band_check_radius);
    for (const auto& pair : pairs) {
        const auto x = slice_year(cleaned, pair.first).values;
        const auto y = slice_year(cleaned, pair.second).values;
        DtwPair p;
        p.pair = pair;
        p.first_length = x.size();
        p.second_length = y.size();
        p.first_min = *std::min_element(x.begin(), x.end());
        p.first_max = *std::max_element(x.begin(), x.end());
        p.second_min = *std::min_element(y.begin(), y.end());
        p.second_max = *std::max_element(y.begin(), y.end());
        p.result = dtw::dtw_align(x, y, config.dtw_options);

        dtw::DtwOptions full = config.dtw_options;
        full.band_radius.reset();
        dtw::DtwOptions band = config.dtw_options;
        band.band_radius = check_radius;
        unbanded.emplace_back(pair, config.dtw_options.band_radius ? dtw::dtw_align(x, y, full) : p.result);
        banded.emplace_back(pair, config.dtw_options.band_radius == check_radius
                                      ? p.result
                                      : dtw::dtw_align(x, y, band));
        analysis.pairs.push_back(std::move(p));
    }

    std::vector<std::pair<dtw::YearPair, dtw::DtwResult>> primary;
    for (const auto& p : analysis.pairs) primary.emplace_back(p.pair, p.result);
    analysis.ranking = dtw::rank_pairs(primary);

    BandCheck check;
    check.radius = check_radius;
    check.unbanded_ranks = dtw::ranks(dtw::rank_pairs(unbanded));
    check.banded_ranks = dtw::ranks(dtw::rank_pairs(banded));
    check.rank_order_changed = check.unbanded_ranks != check.banded_ranks;
    analysis.band_check = check;
    return analysis;
}

AnalysisBundle analyse(const std::vector<WeeklyObservation>& observations, const RunConfig& config) {
    const auto vars = clean_all(observations, config);
    AnalysisBundle bundle;
    for (const auto& cv : vars) {
        VariableSection section;
        section.variable = cv.variable;
        section.cleaning = cv.cleaned.report;
        section.summary = stats::describe(cv.cleaned.series);
        section.seasonal = seasonal_index(cv.cleaned.series, config.seasonal_method);
        section.dtw = analyse_dtw(cv.cleaned.series, config);
        bundle.variables.push_back(std::move(section));
    }
    bundle.adf = price_adf(vars, config);
    return bundle;
}

namespace {

void warn_skipped(OutputSet& out, Variable v, const DtwAnalysis& a) {
    for (const int y : a.skipped_years) {
        out.warnings.push_back("dtw (" + key(v) + "): ISO year " + std::to_string(y) +
                               " is not completely covered; skipped");
    }
    if (a.band_check && a.band_check->rank_order_changed) {
        out.warnings.push_back("dtw (" + key(v) + "): pair ranking changes under a +/-" +
                               std::to_string(a.band_check->radius) + "-week band");
    }
}

}  // namespace

OutputSet run_clean(const RunConfig& config) {
    const auto vars = clean_all(load(config), config);
    OutputSet out;
    add_clean_outputs(out, config, vars);
    return out;
}

OutputSet run_stats(const RunConfig& config) {
    const auto observations = load(config);
    for (const Variable v : config.variables) {
        // Report the failing statistic before cleaning complains about length.
        const auto raw = build_weekly_series(observations, v);
        if (raw.size() < 8) (void)stats::describe(raw);
    }
    const auto vars = clean_all(observations, config);
    std::vector<std::pair<Variable, stats::DescriptiveSummary>> summaries;
    for (const auto& cv : vars) summaries.emplace_back(cv.variable, stats::describe(cv.cleaned.series));
    OutputSet out;
    add_stats_outputs(out, config, summaries, price_adf(vars, config));
    return out;
}

OutputSet run_seasonal(const RunConfig& config) {
    const auto vars = clean_all(load(config), config);
    std::vector<SeasonalIndexTable> tables;
    for (const auto& cv : vars) tables.push_back(seasonal_index(cv.cleaned.series, config.seasonal_method));
    OutputSet out;
    add_seasonal_outputs(out, config, tables);
    return out;
}

OutputSet run_dtw(const RunConfig& config) {
    const auto vars = clean_all(load(config), config);
    OutputSet out;
    for (const auto& cv : vars) {
        const auto analysis = analyse_dtw(cv.cleaned.series, config);
        warn_skipped(out, cv.variable, analysis);
        add_dtw_outputs(out, config, cv.variable, cv.cleaned.series, analysis);
    }
    return out;
}

OutputSet run_report_all(const RunConfig& config) {
    const auto observations = load(config);
    const auto vars = clean_all(observations, config);
    const AnalysisBundle bundle = analyse(observations, config);

    OutputSet out;
    add_clean_outputs(out, config, vars);
    std::vector<std::pair<Variable, stats::DescriptiveSummary>> summaries;
    std::vector<SeasonalIndexTable> tables;
    for (const auto& s : bundle.variables) {
        summaries.emplace_back(s.variable, s.summary);
        tables.push_back(s.seasonal);
    }
    add_stats_outputs(out, config, summaries, bundle.adf);
    add_seasonal_outputs(out, config, tables);
    for (std::size_t k = 0; k < vars.size(); ++k) {
        warn_skipped(out, vars[k].variable, bundle.variables[k].dtw);
        add_dtw_outputs(out, config, vars[k].variable, vars[k].cleaned.series,
                        bundle.variables[k].dtw);
    }
    out.add(config.formats, "weekly_trends.svg", weekly_trends_svg(config, vars));
    out.add(config.formats, "bundle.json", dump(Json(bundle)));
    return out;
}

void to_json(Json& j, const DtwPair& p) {
    j = Json{
        {"pair", p.pair},
        {"label", dtw::to_string(p.pair)},
        {"obs", Json::array({p.first_length, p.second_length})},
        {"first_range", Json::array({p.first_min, p.first_max})},
        {"second_range", Json::array({p.second_min, p.second_max})},
        {"result", p.result},
    };
}

void from_json(const Json& j, DtwPair& p) {
    p.pair = j.at("pair").get<dtw::YearPair>();
    p.first_length = j.at("obs").at(0).get<std::size_t>();
    p.second_length = j.at("obs").at(1).get<std::size_t>();
    p.first_min = j.at("first_range").at(0).get<double>();
    p.first_max = j.at("first_range").at(1).get<double>();
    p.second_min = j.at("second_range").at(0).get<double>();
    p.second_max = j.at("second_range").at(1).get<double>();
    p.result = j.at("result").get<dtw::DtwResult>();
}

void to_json(Json& j, const BandCheck& b) {
    j = Json{
        {"radius", b.radius},
        {"unbanded_ranks", b.unbanded_ranks},
        {"banded_ranks", b.banded_ranks},
        {"rank_order_changed", b.rank_order_changed},
    };
}

void from_json(const Json& j, BandCheck& b) {
    b.radius = j.at("radius").get<std::size_t>();
    b.unbanded_ranks = j.at("unbanded_ranks").get<std::vector<int>>();
    b.banded_ranks = j.at("banded_ranks").get<std::vector<int>>();
    b.rank_order_changed = j.at("rank_order_changed").get<bool>();
}

void to_json(Json& j, const DtwAnalysis& a) {
    j = Json{
        {"pairs", a.pairs},
        {"ranking", a.ranking},
        {"band_check", a.band_check ? Json(*a.band_check) : Json(nullptr)},
        {"skipped_years", a.skipped_years},
    };
}

void from_json(const Json& j, DtwAnalysis& a) {
    a.pairs = j.at("pairs").get<std::vector<DtwPair>>();
    a.ranking = j.at("ranking").get<dtw::PairRanking>();
    const auto& band = j.at("band_check");
    a.band_check = band.is_null() ? std::nullopt : std::optional(band.get<BandCheck>());
    a.skipped_years = j.at("skipped_years").get<std::vector<int>>();
}

void to_json(Json& j, const VariableSection& s) {
    j = Json{
        {"variable", s.variable},
        {"cleaning", s.cleaning},
        {"summary", s.summary},
        {"seasonal", s.seasonal},
        {"dtw", s.dtw},
    };
}

void from_json(const Json& j, VariableSection& s) {
    s.variable = j.at("variable").get<Variable>();
    s.cleaning = j.at("cleaning").get<CleaningReport>();
    s.summary = j.at("summary").get<stats::DescriptiveSummary>();
    s.seasonal = j.at("seasonal").get<SeasonalIndexTable>();
    s.dtw = j.at("dtw").get<DtwAnalysis>();
}

void to_json(Json& j, const AnalysisBundle& b) {
    j = Json{
        {"generator", kGenerator},
        {"variables", b.variables},
        {"adf_log_price_diff", b.adf ? Json(*b.adf) : Json(nullptr)},
    };
}

void from_json(const Json& j, AnalysisBundle& b) {
    b.variables = j.at("variables").get<std::vector<VariableSection>>();
    const auto& adf = j.at("adf_log_price_diff");
    b.adf = adf.is_null() ? std::nullopt : std::optional(adf.get<AdfResult>());
}

}  // namespace seasonwarp::report
