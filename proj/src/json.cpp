#include "seasonwarp/json.hpp"

#include <string>

#include "seasonwarp/error.hpp"

namespace seasonwarp {

namespace {

std::string_view fence_name(Fence f) { return f == Fence::Low ? "low" : "high"; }

Fence parse_fence(std::string_view s) {
    if (s == "low") return Fence::Low;
    if (s == "high") return Fence::High;
    throw InvalidInputError("unknown fence '" + std::string(s) + "'");
}

AdfRegression parse_regression(std::string_view s) {
    if (s == "none") return AdfRegression::None;
    if (s == "constant") return AdfRegression::Constant;
    if (s == "constant+trend") return AdfRegression::ConstantTrend;
    throw InvalidInputError("unknown ADF regression '" + std::string(s) + "'");
}

SeasonalMethod parse_method(std::string_view s) {
    if (s == "weekly-mean") return SeasonalMethod::WeeklyMean;
    if (s == "moving-average") return SeasonalMethod::RatioToMovingAverage;
    throw InvalidInputError("unknown seasonal method '" + std::string(s) + "'");
}

}  // namespace

Variable parse_variable(std::string_view name) {
    if (name == "arrivals") return Variable::Arrivals;
    if (name == "modal_price" || name == "price") return Variable::ModalPrice;
    throw InvalidInputError("unknown variable '" + std::string(name) + "'");
}

void to_json(Json& j, const WeekKey& w) {
    j = Json{{"iso_year", w.iso_year}, {"iso_week", w.iso_week}};
}

void from_json(const Json& j, WeekKey& w) {
    w.iso_year = j.at("iso_year").get<int>();
    w.iso_week = j.at("iso_week").get<int>();
}

void to_json(Json& j, Variable v) { j = std::string(to_string(v)); }

void from_json(const Json& j, Variable& v) { v = parse_variable(j.get<std::string>()); }

void to_json(Json& j, const OutlierWeek& o) {
    j = Json{{"week", o.week}, {"value", o.value}, {"fence_violated", fence_name(o.fence)}};
}

void from_json(const Json& j, OutlierWeek& o) {
    o.week = j.at("week").get<WeekKey>();
    o.value = j.at("value").get<double>();
    o.fence = parse_fence(j.at("fence_violated").get<std::string>());
}

void to_json(Json& j, const CleaningReport& r) {
    j = Json{
        {"interpolated_weeks", r.interpolated_weeks},
        {"outlier_weeks", r.outlier_weeks},
        {"clamped_weeks", r.clamped_weeks},
        {"missing_fraction", r.missing_fraction},
        {"fence_multiplier", r.fence_multiplier},
        {"low_fence", r.low_fence},
        {"high_fence", r.high_fence},
        {"winsorized", r.winsorized},
    };
}

void from_json(const Json& j, CleaningReport& r) {
    r.interpolated_weeks = j.at("interpolated_weeks").get<std::vector<WeekKey>>();
    r.outlier_weeks = j.at("outlier_weeks").get<std::vector<OutlierWeek>>();
    r.clamped_weeks = j.at("clamped_weeks").get<std::vector<WeekKey>>();
    r.missing_fraction = j.at("missing_fraction").get<double>();
    r.fence_multiplier = j.at("fence_multiplier").get<double>();
    r.low_fence = j.at("low_fence").get<double>();
    r.high_fence = j.at("high_fence").get<double>();
    r.winsorized = j.at("winsorized").get<bool>();
}

void to_json(Json& j, const AdfResult& r) {
    j = Json{
        {"test_statistic", r.test_statistic},
        {"p_value", r.p_value},
        {"lags_used", r.lags_used},
        {"n_effective", r.n_effective},
        {"reject_at_1pct", r.reject_at_1pct},
        {"regression", to_string(r.regression)},
    };
}

void from_json(const Json& j, AdfResult& r) {
    r.test_statistic = j.at("test_statistic").get<double>();
    r.p_value = j.at("p_value").get<double>();
    r.lags_used = j.at("lags_used").get<int>();
    r.n_effective = j.at("n_effective").get<int>();
    r.reject_at_1pct = j.at("reject_at_1pct").get<bool>();
    r.regression = parse_regression(j.at("regression").get<std::string>());
}

void to_json(Json& j, const SeasonalEntry& e) {
    j = Json{{"iso_week", e.iso_week}, {"index", e.index}, {"support", e.support}};
}

void from_json(const Json& j, SeasonalEntry& e) {
    e.iso_week = j.at("iso_week").get<int>();
    e.index = j.at("index").get<double>();
    e.support = j.at("support").get<int>();
}

void to_json(Json& j, const SeasonalIndexTable& t) {
    j = Json{
        {"variable", t.variable},
        {"method", to_string(t.method)},
        {"years", t.years},
        {"weighted_mean", t.entries.empty() ? 0.0 : index_weighted_mean(t)},
        {"normalization_ok", !t.entries.empty() && normalization_holds(t)},
        {"entries", t.entries},
    };
}

void from_json(const Json& j, SeasonalIndexTable& t) {
    t.variable = j.at("variable").get<Variable>();
    t.method = parse_method(j.at("method").get<std::string>());
    t.years = j.at("years").get<std::vector<int>>();
    t.entries = j.at("entries").get<std::vector<SeasonalEntry>>();
}

namespace stats {

void to_json(Json& j, const DescriptiveSummary& s) {
    j = Json{
        {"count", s.count},
        {"mean", s.mean},
        {"std", s.std},
        {"cv_percent", s.cv_percent},
        {"skewness", s.skewness},
        {"kurtosis_excess", s.kurtosis_excess},
        {"min", s.min},
        {"p25", s.p25},
        {"median", s.median},
        {"p75", s.p75},
        {"max", s.max},
        {"jb_statistic", s.jb_statistic},
        {"jb_p_value", s.jb_p_value},
    };
}

void from_json(const Json& j, DescriptiveSummary& s) {
    s.count = j.at("count").get<std::size_t>();
    s.mean = j.at("mean").get<double>();
    s.std = j.at("std").get<double>();
    s.cv_percent = j.at("cv_percent").get<double>();
    s.skewness = j.at("skewness").get<double>();
    s.kurtosis_excess = j.at("kurtosis_excess").get<double>();
    s.min = j.at("min").get<double>();
    s.p25 = j.at("p25").get<double>();
    s.median = j.at("median").get<double>();
    s.p75 = j.at("p75").get<double>();
    s.max = j.at("max").get<double>();
    s.jb_statistic = j.at("jb_statistic").get<double>();
    s.jb_p_value = j.at("jb_p_value").get<double>();
}

}  // namespace stats

namespace dtw {

void to_json(Json& j, const DtwOptions& o) {
    j = Json{
        {"band_radius", o.band_radius ? Json(*o.band_radius) : Json(nullptr)},
        {"local_metric", to_string(o.local_metric)},
        {"normalize_input", to_string(o.normalize_input)},
    };
}

void from_json(const Json& j, DtwOptions& o) {
    const auto& band = j.at("band_radius");
    o.band_radius = band.is_null() ? std::nullopt : std::optional(band.get<std::size_t>());
    const auto metric = j.at("local_metric").get<std::string>();
    if (metric == "euclidean") o.local_metric = LocalMetric::Euclidean;
    else if (metric == "absolute") o.local_metric = LocalMetric::AbsoluteDifference;
    else throw InvalidInputError("unknown local metric '" + metric + "'");
    const auto norm = j.at("normalize_input").get<std::string>();
    if (norm == "zscore") o.normalize_input = Normalization::ZScore;
    else if (norm == "none") o.normalize_input = Normalization::None;
    else throw InvalidInputError("unknown normalization '" + norm + "'");
}

void to_json(Json& j, const PathStep& s) { j = Json::array({s.i, s.j}); }

void from_json(const Json& j, PathStep& s) {
    s.i = j.at(0).get<std::size_t>();
    s.j = j.at(1).get<std::size_t>();
}

void to_json(Json& j, const DtwResult& r) {
    j = Json{
        {"options", r.options},
        {"total_cost", r.total_cost},
        {"mean_cost", r.mean_cost},
        {"path_length", r.path_length},
        {"path", r.path.steps},
        {"warped_pair", Json::array({r.warped_pair[0], r.warped_pair[1]})},
    };
}

void from_json(const Json& j, DtwResult& r) {
    r.options = j.at("options").get<DtwOptions>();
    r.total_cost = j.at("total_cost").get<double>();
    r.mean_cost = j.at("mean_cost").get<double>();
    r.path_length = j.at("path_length").get<std::size_t>();
    r.path.steps = j.at("path").get<std::vector<PathStep>>();
    const auto& warped = j.at("warped_pair");
    r.warped_pair[0] = warped.at(0).get<std::vector<double>>();
    r.warped_pair[1] = warped.at(1).get<std::vector<double>>();
}

void to_json(Json& j, const YearPair& p) { j = Json::array({p.first, p.second}); }

void from_json(const Json& j, YearPair& p) {
    p.first = j.at(0).get<int>();
    p.second = j.at(1).get<int>();
}

void to_json(Json& j, const RankedPair& r) {
    j = Json{
        {"pair", r.pair},
        {"label", to_string(r.pair)},
        {"total_cost", r.total_cost},
        {"mean_cost", r.mean_cost},
        {"path_length", r.path_length},
        {"rank", r.rank},
    };
}

void from_json(const Json& j, RankedPair& r) {
    r.pair = j.at("pair").get<YearPair>();
    r.total_cost = j.at("total_cost").get<double>();
    r.mean_cost = j.at("mean_cost").get<double>();
    r.path_length = j.at("path_length").get<std::size_t>();
    r.rank = j.at("rank").get<int>();
}

void to_json(Json& j, const PairRanking& r) { j = Json{{"entries", r.entries}}; }

void from_json(const Json& j, PairRanking& r) {
    r.entries = j.at("entries").get<std::vector<RankedPair>>();
}

}  // namespace dtw

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace seasonwarp
