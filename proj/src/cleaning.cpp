#include "seasonwarp/cleaning.hpp"

#include <cmath>
#include <string>

#include "seasonwarp/error.hpp"
#include "seasonwarp/spline.hpp"
#include "seasonwarp/stats.hpp"

namespace seasonwarp {

namespace {

struct Fences {
    double low;
    double high;
};

Fences iqr_fences(std::span<const double> values, double k) {
    const double q1 = stats::quantile(values, 0.25);
    const double q3 = stats::quantile(values, 0.75);
    const double iqr = q3 - q1;
    if (iqr == 0.0) return {q1, q3};
    return {q1 - k * iqr, q3 + k * iqr};
}

}  // namespace

std::vector<WeekKey> find_missing_weeks(const WeeklySeries& series) {
    std::vector<WeekKey> missing;
    const auto pts = series.points();
    for (std::size_t k = 1; k < pts.size(); ++k) {
        const long gap = weeks_between(pts[k - 1].week, pts[k].week);
        for (long g = 1; g < gap; ++g) missing.push_back(advance(pts[k - 1].week, g));
    }
    return missing;
}

CleanedSeries spline_fill(const WeeklySeries& series) {
    if (series.size() < 4) {
        throw InsufficientDataError("spline_fill needs at least 4 observed points, got " +
                                    std::to_string(series.size()));
    }
    const auto pts = series.points();
    const WeekKey origin = pts.front().week;

    CleaningReport report;
    const std::size_t span = series.span_weeks();
    if (span == pts.size()) {
        return {series, report};
    }

    std::vector<double> t, y;
    t.reserve(pts.size());
    y.reserve(pts.size());
    for (const auto& p : pts) {
        t.push_back(static_cast<double>(weeks_between(origin, p.week)));
        y.push_back(p.value);
    }
    const NaturalCubicSpline spline(t, y);

    std::vector<SeriesPoint> dense;
    dense.reserve(span);
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k > 0) {
            const long gap = weeks_between(pts[k - 1].week, pts[k].week);
            for (long g = 1; g < gap; ++g) {
                const WeekKey week = advance(pts[k - 1].week, g);
                double value = spline(t[k - 1] + static_cast<double>(g));
                if (value < 0.0) {
                    value = 0.0;
                    report.clamped_weeks.push_back(week);
                }
                dense.push_back({week, value, PointFlag::Interpolated});
                report.interpolated_weeks.push_back(week);
            }
        }
        dense.push_back(pts[k]);
    }
    report.missing_fraction =
        static_cast<double>(report.interpolated_weeks.size()) / static_cast<double>(span);
    return {WeeklySeries(series.variable(), std::move(dense)), std::move(report)};
}

std::vector<OutlierFlag> iqr_outliers(std::span<const double> values, double k) {
    if (values.size() < 4) {
        throw InsufficientDataError("iqr_outliers needs at least 4 values, got " +
                                    std::to_string(values.size()));
    }
    if (std::isnan(k) || k < 0.0) throw DomainError("fence multiplier must be non-negative");
    std::vector<OutlierFlag> flags;
    if (std::isinf(k)) return flags;
    const Fences f = iqr_fences(values, k);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < f.low) flags.push_back({i, Fence::Low});
        else if (values[i] > f.high) flags.push_back({i, Fence::High});
    }
    return flags;
}

CleanedSeries clean_series(const WeeklySeries& series, const CleanOptions& options) {
    const auto observed = series.values();
    // Validates the point count before any spline work.
    const auto flags = iqr_outliers(observed, options.fence_multiplier);
    auto filled = spline_fill(series);

    CleaningReport& report = filled.report;
    report.fence_multiplier = options.fence_multiplier;
    report.winsorized = options.winsorize;
    if (!std::isinf(options.fence_multiplier)) {
        const Fences f = iqr_fences(observed, options.fence_multiplier);
        report.low_fence = f.low;
        report.high_fence = f.high;
    }
    if (flags.empty()) return filled;

    const auto src = series.points();
    std::vector<SeriesPoint> points(filled.series.points().begin(), filled.series.points().end());
    std::size_t cursor = 0;
    for (const auto& flag : flags) {
        const SeriesPoint& original = src[flag.index];
        report.outlier_weeks.push_back({original.week, original.value, flag.fence});
        while (points[cursor].week < original.week) ++cursor;
        SeriesPoint& p = points[cursor];
        p.flag = PointFlag::OutlierRetained;
        if (options.winsorize) {
            p.value = flag.fence == Fence::Low ? report.low_fence : report.high_fence;
        }
    }
    return {WeeklySeries(series.variable(), std::move(points)), std::move(report)};
}

}  // namespace seasonwarp
