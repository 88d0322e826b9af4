#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "seasonwarp/calendar.hpp"

namespace seasonwarp {

enum class Variable { Arrivals, ModalPrice };

enum class PointFlag { Observed, Interpolated, OutlierRetained };

[[nodiscard]] std::string_view to_string(Variable variable);
[[nodiscard]] std::string_view to_string(PointFlag flag);

/// One market record. A value left blank in the source is absent, which
/// becomes a gap in that variable's series.
struct WeeklyObservation {
    WeekKey week;
    std::optional<double> arrivals;     ///< quintals
    std::optional<double> modal_price;  ///< currency per quintal
};

struct SeriesPoint {
    WeekKey week;
    double value = 0.0;
    PointFlag flag = PointFlag::Observed;

    friend bool operator==(const SeriesPoint&, const SeriesPoint&) = default;
};

/// Ordered weekly series of one variable. Points are strictly increasing in
/// week; gaps are allowed until the series has been cleaned.
class WeeklySeries {
public:
    WeeklySeries() = default;

    /// Throws DataIntegrityError when points are not strictly increasing.
    WeeklySeries(Variable variable, std::vector<SeriesPoint> points);

    [[nodiscard]] Variable variable() const noexcept { return variable_; }
    [[nodiscard]] std::span<const SeriesPoint> points() const noexcept { return points_; }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    [[nodiscard]] bool empty() const noexcept { return points_.empty(); }
    [[nodiscard]] std::vector<double> values() const;

    /// True when consecutive points are exactly one week apart.
    [[nodiscard]] bool is_dense() const;

    /// Number of weeks from the first to the last point inclusive (0 if empty).
    [[nodiscard]] std::size_t span_weeks() const;

    friend bool operator==(const WeeklySeries&, const WeeklySeries&) = default;

private:
    Variable variable_ = Variable::ModalPrice;
    std::vector<SeriesPoint> points_;
};

/// The values of one ISO year, one per week (52 or 53 entries).
struct YearSlice {
    int iso_year = 0;
    std::vector<double> values;
};

/// Sorts `records` by week and keeps the chosen variable. Records where that
/// variable is absent leave a gap. Throws DataIntegrityError on a duplicate
/// week and InvalidInputError on negative or non-finite values.
[[nodiscard]] WeeklySeries build_weekly_series(std::span<const WeeklyObservation> records,
                                               Variable variable);

/// Throws IncompleteYearError listing every missing week of `iso_year`.
[[nodiscard]] YearSlice slice_year(const WeeklySeries& series, int iso_year);

/// ISO years whose every week is present in `series`, ascending.
[[nodiscard]] std::vector<int> complete_years(const WeeklySeries& series);

/// ln(v[t+1]) - ln(v[t]); requires at least two strictly positive values.
[[nodiscard]] std::vector<double> log_diff(std::span<const double> values);

}  // namespace seasonwarp
