#pragma once

#include <chrono>
#include <compare>
#include <string>

namespace seasonwarp {

/// ISO-8601 week-numbering key. Weeks run Monday to Sunday; week 1 is the
/// week containing the year's first Thursday.
struct WeekKey {
    int iso_year = 0;
    int iso_week = 0;

    friend constexpr auto operator<=>(const WeekKey&, const WeekKey&) = default;
};

/// Number of ISO weeks (52 or 53) in `iso_year`.
[[nodiscard]] int weeks_in_iso_year(int iso_year);

/// Validating constructor; throws InvalidInputError for week 0, week > 53, or
/// week 53 in a 52-week year.
[[nodiscard]] WeekKey make_week_key(int iso_year, int iso_week);

[[nodiscard]] WeekKey iso_week_of(std::chrono::year_month_day date);

/// Throws InvalidInputError when (year, month, day) is not a Gregorian date.
[[nodiscard]] WeekKey iso_week_of(int year, unsigned month, unsigned day);

[[nodiscard]] std::chrono::sys_days week_start(WeekKey week);

/// Sunday closing the week; the week-ending date used by the CSV format.
[[nodiscard]] std::chrono::sys_days week_ending(WeekKey week);

/// Signed number of weeks from `from` to `to`.
[[nodiscard]] long weeks_between(WeekKey from, WeekKey to);

[[nodiscard]] WeekKey advance(WeekKey week, long weeks);

/// "2022-W09".
[[nodiscard]] std::string to_string(WeekKey week);

}  // namespace seasonwarp
