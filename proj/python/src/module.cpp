#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "seasonwarp/adf.hpp"
#include "seasonwarp/cleaning.hpp"
#include "seasonwarp/dtw.hpp"
#include "seasonwarp/error.hpp"
#include "seasonwarp/fixture.hpp"
#include "seasonwarp/json.hpp"
#include "seasonwarp/seasonal.hpp"
#include "seasonwarp/spline.hpp"
#include "seasonwarp/stats.hpp"

namespace py = pybind11;
using namespace seasonwarp;

namespace {

// Structured results cross the boundary as plain dicts and lists.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

AdfRegression regression_of(const std::string& name) {
    if (name == "none") return AdfRegression::None;
    if (name == "constant") return AdfRegression::Constant;
    if (name == "constant+trend") return AdfRegression::ConstantTrend;
    throw InvalidInputError("unknown regression '" + name + "'");
}

dtw::DtwOptions dtw_options(std::optional<std::size_t> band, const std::string& normalize) {
    dtw::DtwOptions o;
    o.band_radius = band;
    if (normalize == "zscore") o.normalize_input = dtw::Normalization::ZScore;
    else if (normalize != "none") throw InvalidInputError("unknown normalization '" + normalize + "'");
    return o;
}

WeeklySeries weekly(const std::vector<double>& values, int start_year, int start_week) {
    const WeekKey start = make_week_key(start_year, start_week);
    std::vector<SeriesPoint> pts;
    for (std::size_t k = 0; k < values.size(); ++k) pts.push_back({advance(start, static_cast<long>(k)), values[k]});
    return WeeklySeries(Variable::ModalPrice, std::move(pts));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Weekly market series analysis: statistics, seasonal indices and DTW";
    m.attr("__version__") = "0.1.0";

    auto base = py::register_exception<Error>(m, "SeasonwarpError", PyExc_RuntimeError);
    py::register_exception<InvalidInputError>(m, "InvalidInputError", base.ptr());
    py::register_exception<InsufficientDataError>(m, "InsufficientDataError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<NoValidPathError>(m, "NoValidPathError", base.ptr());

    m.def("iso_week_of", [](int y, unsigned mo, unsigned d) {
        const WeekKey k = iso_week_of(y, mo, d);
        return py::make_tuple(k.iso_year, k.iso_week);
    }, py::arg("year"), py::arg("month"), py::arg("day"));

    m.def("quantile", [](const std::vector<double>& v, double q) { return stats::quantile(v, q); },
          py::arg("values"), py::arg("q"));
    m.def("moments", [](const std::vector<double>& v) {
        const auto r = stats::moments(v);
        return to_py(Json{{"mean", r.mean}, {"std_sample", r.std_sample}, {"skewness", r.skewness},
                          {"kurtosis_excess", r.kurtosis_excess}});
    }, py::arg("values"));
    m.def("jarque_bera", [](const std::vector<double>& v) {
        const auto r = stats::jarque_bera(v);
        return py::make_tuple(r.statistic, r.p_value);
    }, py::arg("values"));
    m.def("describe", [](const std::vector<double>& v) { return to_py(Json(stats::describe(v))); },
          py::arg("values"));
    m.def("log_diff", [](const std::vector<double>& v) { return log_diff(v); }, py::arg("values"));

    m.def("iqr_outliers", [](const std::vector<double>& v, double k) {
        py::list out;
        for (const auto& f : iqr_outliers(v, k)) out.append(py::make_tuple(f.index, f.fence == Fence::Low ? "low" : "high"));
        return out;
    }, py::arg("values"), py::arg("k") = 3.0);

    m.def("spline_interpolate", [](const std::vector<double>& x, const std::vector<double>& y,
                                   const std::vector<double>& t) {
        const NaturalCubicSpline s(x, y);
        std::vector<double> out;
        for (double v : t) out.push_back(s(v));
        return out;
    }, py::arg("x"), py::arg("y"), py::arg("t"));

    m.def("adf_test", [](const std::vector<double>& v, std::optional<int> max_lag, const std::string& regression) {
        return to_py(Json(adf_test(v, max_lag, regression_of(regression))));
    }, py::arg("values"), py::arg("max_lag") = py::none(), py::arg("regression") = "constant");

    m.def("seasonal_index", [](const std::vector<double>& v, int start_year, int start_week, const std::string& method) {
        const auto m = method == "moving-average" ? SeasonalMethod::RatioToMovingAverage : SeasonalMethod::WeeklyMean;
        return to_py(Json(seasonal_index(weekly(v, start_year, start_week), m)));
    }, py::arg("values"), py::arg("start_year"), py::arg("start_week") = 1, py::arg("method") = "weekly-mean");

    m.def("dtw_align", [](const std::vector<double>& x, const std::vector<double>& y,
                          std::optional<std::size_t> band, const std::string& normalize) {
        return to_py(Json(dtw::dtw_align(x, y, dtw_options(band, normalize))));
    }, py::arg("x"), py::arg("y"), py::arg("band") = py::none(), py::arg("normalize") = "none");

    m.def("rank_pairs", [](const std::vector<double>& totals) {
        std::vector<dtw::PairCost> costs;
        for (std::size_t k = 0; k < totals.size(); ++k) {
            costs.push_back({{static_cast<int>(k), static_cast<int>(k) + 1}, totals[k], 0.0, 1});
        }
        return dtw::ranks(dtw::rank_pairs(costs));
    }, py::arg("total_costs"), "Rank 1 is the smallest total cost.");

    m.def("generate_fixture", [](std::uint64_t seed) {
        FixtureOptions o;
        o.seed = seed;
        return generate_fixture(o).csv;
    }, py::arg("seed") = 42);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::vector<std::string> all{"seasonwarp"};
        all.insert(all.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& a : all) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
