#include "seasonwarp/calendar.hpp"

#include <cstdio>

#include "seasonwarp/error.hpp"

namespace seasonwarp {

using namespace std::chrono;

namespace {

// Monday of ISO week 1: January 4th always falls in week 1.
sys_days first_monday(int iso_year) {
    const sys_days jan4{year{iso_year} / January / 4};
    const unsigned iso_weekday = weekday{jan4}.iso_encoding();
    return jan4 - days{iso_weekday - 1};
}

}  // namespace

int weeks_in_iso_year(int iso_year) {
    return static_cast<int>((first_monday(iso_year + 1) - first_monday(iso_year)).count() / 7);
}

WeekKey make_week_key(int iso_year, int iso_week) {
    if (iso_week < 1 || iso_week > weeks_in_iso_year(iso_year)) {
        throw InvalidInputError("ISO year " + std::to_string(iso_year) + " has no week " +
                                std::to_string(iso_week));
    }
    return WeekKey{iso_year, iso_week};
}

WeekKey iso_week_of(std::chrono::year_month_day date) {
    if (!date.ok()) {
        throw InvalidInputError("invalid calendar date");
    }
    const sys_days day{date};
    const unsigned iso_weekday = weekday{day}.iso_encoding();
    // The Thursday of the same Monday-Sunday week decides the ISO year.
    const sys_days thursday = day + days{4} - days{iso_weekday};
    const int iso_year = static_cast<int>(year_month_day{thursday}.year());
    const auto offset = (thursday - sys_days{year{iso_year} / January / 1}).count();
    return WeekKey{iso_year, static_cast<int>(offset / 7) + 1};
}

WeekKey iso_week_of(int y, unsigned m, unsigned d) {
    const year_month_day date{year{y}, month{m}, day{d}};
    if (!date.ok()) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "invalid calendar date %04d-%02u-%02u", y, m, d);
        throw InvalidInputError(buf);
    }
    return iso_week_of(date);
}

sys_days week_start(WeekKey week) {
    return first_monday(week.iso_year) + days{7 * (week.iso_week - 1)};
}

sys_days week_ending(WeekKey week) { return week_start(week) + days{6}; }

long weeks_between(WeekKey from, WeekKey to) {
    return static_cast<long>((week_start(to) - week_start(from)).count() / 7);
}

WeekKey advance(WeekKey week, long weeks) {
    return iso_week_of(year_month_day{week_start(week) + days{7 * weeks}});
}

std::string to_string(WeekKey week) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-W%02d", week.iso_year, week.iso_week);
    return buf;
}

IncompleteYearError::IncompleteYearError(int iso_year, std::vector<WeekKey> missing)
    : Error([&] {
          std::string msg = "ISO year " + std::to_string(iso_year) + " is incomplete; missing";
          for (const auto& w : missing) msg += " " + to_string(w);
          return msg;
      }()),
      iso_year_(iso_year),
      missing_(std::move(missing)) {}

}  // namespace seasonwarp
