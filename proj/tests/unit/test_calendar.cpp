#include <doctest.h>

#include <chrono>

#include "oracles.hpp"
#include "seasonwarp/calendar.hpp"
#include "seasonwarp/error.hpp"

using namespace seasonwarp;
using namespace std::chrono;

TEST_CASE("iso_week_of matches strftime %G/%V for every day 2000-2030") {
    for (sys_days d = sys_days{2000y / January / 1}; d <= sys_days{2030y / December / 31}; d += days{1}) {
        const year_month_day ymd{d};
        const auto [y, w] = oracle::iso_week(static_cast<int>(ymd.year()),
                                             static_cast<int>(static_cast<unsigned>(ymd.month())),
                                             static_cast<int>(static_cast<unsigned>(ymd.day())));
        const WeekKey k = iso_week_of(ymd);
        REQUIRE(k.iso_year == y);
        REQUIRE(k.iso_week == w);
    }
}

TEST_CASE("year-boundary weeks") {
    CHECK(iso_week_of(2021, 1, 3) == WeekKey{2020, 53});
    CHECK(iso_week_of(2021, 1, 4) == WeekKey{2021, 1});
    CHECK(iso_week_of(2024, 12, 30) == WeekKey{2025, 1});
    CHECK(iso_week_of(2008, 12, 29) == WeekKey{2009, 1});
}

TEST_CASE("weeks_in_iso_year") {
    CHECK(weeks_in_iso_year(2020) == 53);
    CHECK(weeks_in_iso_year(2015) == 53);
    CHECK(weeks_in_iso_year(2021) == 52);
    CHECK(weeks_in_iso_year(2026) == 53);
}

TEST_CASE("week_start is Monday, week_ending is Sunday, both in the week") {
    for (int y = 2009; y <= 2026; ++y) {
        for (int w = 1; w <= weeks_in_iso_year(y); ++w) {
            const WeekKey k{y, w};
            CHECK(weekday{week_start(k)} == Monday);
            CHECK(weekday{week_ending(k)} == Sunday);
            CHECK(iso_week_of(year_month_day{week_start(k)}) == k);
            CHECK(iso_week_of(year_month_day{week_ending(k)}) == k);
        }
    }
}

TEST_CASE("advance and weeks_between are inverse") {
    const WeekKey a{2019, 50};
    for (long n = -120; n <= 120; ++n) {
        const WeekKey b = advance(a, n);
        CHECK(weeks_between(a, b) == n);
    }
    CHECK(advance(WeekKey{2020, 53}, 1) == WeekKey{2021, 1});
}

TEST_CASE("invalid dates and weeks are rejected") {
    CHECK_THROWS_AS((void)iso_week_of(2021, 2, 30), InvalidInputError);
    CHECK_THROWS_AS((void)make_week_key(2021, 53), InvalidInputError);
    CHECK_THROWS_AS((void)make_week_key(2021, 0), InvalidInputError);
    CHECK(make_week_key(2020, 53) == WeekKey{2020, 53});
}

TEST_CASE("to_string") {
    CHECK(to_string(WeekKey{2022, 9}) == "2022-W09");
}
