#include "seasonwarp/seasonal.hpp"

#include <cmath>
#include <string>

#include "seasonwarp/error.hpp"

namespace seasonwarp {

namespace {

constexpr int kMaxWeeks = 53;
constexpr std::size_t kHalfWindow = 26;

struct YearValues {
    int year;
    std::vector<double> values;
};

std::vector<YearValues> complete_year_values(const WeeklySeries& series) {
    const auto years = complete_years(series);
    if (years.size() < 2) {
        throw InsufficientDataError("seasonal index needs at least 2 complete ISO years, got " +
                                    std::to_string(years.size()));
    }
    std::vector<YearValues> out;
    out.reserve(years.size());
    for (const int y : years) out.push_back({y, slice_year(series, y).values});
    return out;
}

SeasonalIndexTable weekly_mean_index(const WeeklySeries& series) {
    const auto data = complete_year_values(series);
    std::vector<double> sums(kMaxWeeks, 0.0);
    std::vector<int> support(kMaxWeeks, 0);
    double total = 0.0;
    std::size_t count = 0;
    for (const auto& yv : data) {
        for (std::size_t w = 0; w < yv.values.size(); ++w) {
            sums[w] += yv.values[w];
            support[w] += 1;
            total += yv.values[w];
            ++count;
        }
    }
    const double grand_mean = total / static_cast<double>(count);
    if (grand_mean == 0.0) throw DomainError("seasonal index undefined for a zero grand mean");

    SeasonalIndexTable table;
    table.variable = series.variable();
    table.method = SeasonalMethod::WeeklyMean;
    for (const auto& yv : data) table.years.push_back(yv.year);
    for (int w = 0; w < kMaxWeeks; ++w) {
        if (support[w] == 0) continue;
        const double week_mean = sums[w] / support[w];
        table.entries.push_back({w + 1, 100.0 * week_mean / grand_mean, support[w]});
    }
    return table;
}

SeasonalIndexTable moving_average_index(const WeeklySeries& series) {
    const auto data = complete_year_values(series);
    std::vector<double> flat;
    std::vector<int> week_of;
    for (const auto& yv : data) {
        for (std::size_t w = 0; w < yv.values.size(); ++w) {
            flat.push_back(yv.values[w]);
            week_of.push_back(static_cast<int>(w));
        }
    }

    std::vector<double> sums(kMaxWeeks, 0.0);
    std::vector<int> support(kMaxWeeks, 0);
    for (std::size_t t = kHalfWindow; t + kHalfWindow < flat.size(); ++t) {
        double ma = 0.5 * (flat[t - kHalfWindow] + flat[t + kHalfWindow]);
        for (std::size_t s = t - kHalfWindow + 1; s < t + kHalfWindow; ++s) ma += flat[s];
        ma /= 2.0 * static_cast<double>(kHalfWindow);
        if (!(ma > 0.0)) {
            throw DomainError("moving-average detrending needs positive data");
        }
        sums[week_of[t]] += 100.0 * flat[t] / ma;
        support[week_of[t]] += 1;
    }

    SeasonalIndexTable table;
    table.variable = series.variable();
    table.method = SeasonalMethod::RatioToMovingAverage;
    for (const auto& yv : data) table.years.push_back(yv.year);

    double weighted = 0.0;
    int total_support = 0;
    for (int w = 0; w < kMaxWeeks; ++w) {
        // Week 53 is only centrable when a long year sits inside the window.
        if (w == kMaxWeeks - 1 && support[w] == 0) break;
        if (support[w] == 0) {
            throw InsufficientDataError("moving-average detrending leaves ISO week " +
                                        std::to_string(w + 1) + " without support");
        }
        const double ratio = sums[w] / support[w];
        table.entries.push_back({w + 1, ratio, support[w]});
        weighted += ratio * support[w];
        total_support += support[w];
    }
    const double scale = 100.0 / (weighted / total_support);
    for (auto& e : table.entries) e.index *= scale;
    return table;
}

}  // namespace

std::string_view to_string(SeasonalMethod method) {
    switch (method) {
        case SeasonalMethod::WeeklyMean: return "weekly-mean";
        case SeasonalMethod::RatioToMovingAverage: return "moving-average";
    }
    return "unknown";
}

SeasonalIndexTable seasonal_index(const WeeklySeries& series, SeasonalMethod method) {
    return method == SeasonalMethod::WeeklyMean ? weekly_mean_index(series)
                                                : moving_average_index(series);
}

double index_weighted_mean(const SeasonalIndexTable& table) {
    if (table.entries.empty()) throw InsufficientDataError("empty seasonal index table");
    double weighted = 0.0;
    double total = 0.0;
    for (const auto& e : table.entries) {
        weighted += e.index * e.support;
        total += e.support;
    }
    return weighted / total;
}

bool normalization_holds(const SeasonalIndexTable& table, double tolerance) {
    return std::abs(index_weighted_mean(table) - 100.0) <= tolerance;
}

}  // namespace seasonwarp
