#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "seasonwarp/series.hpp"

namespace seasonwarp {

enum class Fence { Low, High };

struct OutlierFlag {
    std::size_t index = 0;
    Fence fence = Fence::High;

    friend bool operator==(const OutlierFlag&, const OutlierFlag&) = default;
};

struct OutlierWeek {
    WeekKey week;
    double value = 0.0;
    Fence fence = Fence::High;

    friend bool operator==(const OutlierWeek&, const OutlierWeek&) = default;
};

struct CleaningReport {
    std::vector<WeekKey> interpolated_weeks;
    std::vector<OutlierWeek> outlier_weeks;
    /// Interpolated weeks whose spline value went negative and was set to 0.
    std::vector<WeekKey> clamped_weeks;
    /// interpolated_weeks.size() / span weeks.
    double missing_fraction = 0.0;
    double fence_multiplier = 3.0;
    double low_fence = 0.0;
    double high_fence = 0.0;
    bool winsorized = false;

    friend bool operator==(const CleaningReport&, const CleaningReport&) = default;
};

/// Weeks strictly between the first and last point with no observation.
[[nodiscard]] std::vector<WeekKey> find_missing_weeks(const WeeklySeries& series);

struct CleanedSeries {
    WeeklySeries series;
    CleaningReport report;
};

/// Fills every gap with a natural cubic spline through the observed points
/// (weeks mapped to consecutive integers). Observed values pass through
/// untouched. Requires at least 4 observed points.
[[nodiscard]] CleanedSeries spline_fill(const WeeklySeries& series);

/// Indices of values outside [Q1 - k*IQR, Q3 + k*IQR] with linearly
/// interpolated quartiles. Nothing is modified. Requires at least 4 values.
[[nodiscard]] std::vector<OutlierFlag> iqr_outliers(std::span<const double> values, double k = 3.0);

struct CleanOptions {
    double fence_multiplier = 3.0;
    /// Clamp flagged values to the violated fence instead of keeping them.
    bool winsorize = false;
};

/// spline_fill, then flag fence violations among the observed values. Flagged
/// points carry PointFlag::OutlierRetained.
[[nodiscard]] CleanedSeries clean_series(const WeeklySeries& series, const CleanOptions& options = {});

}  // namespace seasonwarp
