#include "seasonwarp/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "seasonwarp/error.hpp"

namespace seasonwarp {

std::string_view to_string(Variable variable) {
    switch (variable) {
        case Variable::Arrivals: return "arrivals";
        case Variable::ModalPrice: return "modal_price";
    }
    return "unknown";
}

std::string_view to_string(PointFlag flag) {
    switch (flag) {
        case PointFlag::Observed: return "observed";
        case PointFlag::Interpolated: return "interpolated";
        case PointFlag::OutlierRetained: return "outlier_retained";
    }
    return "unknown";
}

WeeklySeries::WeeklySeries(Variable variable, std::vector<SeriesPoint> points)
    : variable_(variable), points_(std::move(points)) {
    for (std::size_t k = 1; k < points_.size(); ++k) {
        if (!(points_[k - 1].week < points_[k].week)) {
            throw DataIntegrityError("series points not strictly increasing at " +
                                     to_string(points_[k].week));
        }
    }
}

std::vector<double> WeeklySeries::values() const {
    std::vector<double> out;
    out.reserve(points_.size());
    for (const auto& p : points_) out.push_back(p.value);
    return out;
}

bool WeeklySeries::is_dense() const {
    for (std::size_t k = 1; k < points_.size(); ++k) {
        if (weeks_between(points_[k - 1].week, points_[k].week) != 1) return false;
    }
    return true;
}

std::size_t WeeklySeries::span_weeks() const {
    if (points_.empty()) return 0;
    return static_cast<std::size_t>(weeks_between(points_.front().week, points_.back().week)) + 1;
}

WeeklySeries build_weekly_series(std::span<const WeeklyObservation> records, Variable variable) {
    std::vector<const WeeklyObservation*> sorted;
    sorted.reserve(records.size());
    for (const auto& r : records) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(),
              [](const auto* a, const auto* b) { return a->week < b->week; });

    std::vector<SeriesPoint> points;
    points.reserve(sorted.size());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        const auto& rec = *sorted[k];
        if (k > 0 && sorted[k - 1]->week == rec.week) {
            throw DataIntegrityError("duplicate observation for week " + to_string(rec.week));
        }
        const auto& value = variable == Variable::Arrivals ? rec.arrivals : rec.modal_price;
        if (!value) continue;
        if (!std::isfinite(*value) || *value < 0.0) {
            throw InvalidInputError(std::string(to_string(variable)) + " at " +
                                    to_string(rec.week) + " must be finite and non-negative");
        }
        points.push_back({rec.week, *value, PointFlag::Observed});
    }
    return WeeklySeries(variable, std::move(points));
}

YearSlice slice_year(const WeeklySeries& series, int iso_year) {
    const int weeks = weeks_in_iso_year(iso_year);
    const auto pts = series.points();
    auto it = std::lower_bound(pts.begin(), pts.end(), WeekKey{iso_year, 1},
                               [](const SeriesPoint& p, const WeekKey& w) { return p.week < w; });

    YearSlice slice{iso_year, {}};
    slice.values.reserve(static_cast<std::size_t>(weeks));
    std::vector<WeekKey> missing;
    for (int w = 1; w <= weeks; ++w) {
        const WeekKey key{iso_year, w};
        if (it != pts.end() && it->week == key) {
            slice.values.push_back(it->value);
            ++it;
        } else {
            missing.push_back(key);
        }
    }
    if (!missing.empty()) throw IncompleteYearError(iso_year, std::move(missing));
    return slice;
}

std::vector<int> complete_years(const WeeklySeries& series) {
    std::vector<int> years;
    const auto pts = series.points();
    std::size_t k = 0;
    while (k < pts.size()) {
        const int year = pts[k].week.iso_year;
        std::size_t end = k;
        while (end < pts.size() && pts[end].week.iso_year == year) ++end;
        if (static_cast<int>(end - k) == weeks_in_iso_year(year)) years.push_back(year);
        k = end;
    }
    return years;
}

std::vector<double> log_diff(std::span<const double> values) {
    if (values.size() < 2) {
        throw InsufficientDataError("log_diff needs at least 2 values, got " +
                                    std::to_string(values.size()));
    }
    std::vector<double> out;
    out.reserve(values.size() - 1);
    for (std::size_t t = 0; t < values.size(); ++t) {
        if (!(values[t] > 0.0)) {
            throw DomainError("log_diff requires positive values; element " + std::to_string(t) +
                              " is " + std::to_string(values[t]));
        }
        if (t > 0) out.push_back(std::log(values[t]) - std::log(values[t - 1]));
    }
    return out;
}

}  // namespace seasonwarp
