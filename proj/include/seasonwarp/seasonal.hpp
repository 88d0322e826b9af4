#pragma once

#include <string_view>
#include <vector>

#include "seasonwarp/series.hpp"

namespace seasonwarp {

enum class SeasonalMethod {
    /// 100 * (mean of week w across years) / (grand mean).
    WeeklyMean,
    /// Ratios to a centred 2x52 moving average, averaged per week and rescaled
    /// to a support-weighted mean of 100.
    RatioToMovingAverage,
};

[[nodiscard]] std::string_view to_string(SeasonalMethod method);

struct SeasonalEntry {
    int iso_week = 0;
    double index = 0.0;  ///< base 100
    int support = 0;     ///< years contributing to this week

    friend bool operator==(const SeasonalEntry&, const SeasonalEntry&) = default;
};

struct SeasonalIndexTable {
    Variable variable = Variable::ModalPrice;
    SeasonalMethod method = SeasonalMethod::WeeklyMean;
    std::vector<int> years;  ///< complete ISO years used
    std::vector<SeasonalEntry> entries;

    friend bool operator==(const SeasonalIndexTable&, const SeasonalIndexTable&) = default;
};

/// Seasonal indices over the complete ISO years of `series`. Week 53 is kept
/// as its own entry, supported only by the 53-week years; the moving-average
/// method drops it when no 53rd week lies 26 weeks clear of both ends.
/// Throws InsufficientDataError with fewer than two complete years.
[[nodiscard]] SeasonalIndexTable seasonal_index(const WeeklySeries& series,
                                                SeasonalMethod method = SeasonalMethod::WeeklyMean);

/// Support-weighted mean of the indices; 100 for complete-year tables.
[[nodiscard]] double index_weighted_mean(const SeasonalIndexTable& table);

[[nodiscard]] bool normalization_holds(const SeasonalIndexTable& table, double tolerance = 1e-6);

}  // namespace seasonwarp
