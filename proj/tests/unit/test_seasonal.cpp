#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "seasonwarp/error.hpp"
#include "seasonwarp/seasonal.hpp"

using namespace seasonwarp;

namespace {

// 2019 (52), 2020 (53), 2021 (52) plus a partial 2022.
std::vector<double> three_years(std::mt19937& rng) {
    std::uniform_real_distribution<double> noise(0.8, 1.2);
    std::vector<double> v;
    for (int k = 0; k < 52 + 53 + 52 + 20; ++k) {
        v.push_back((100.0 + 40.0 * std::sin(k * 6.283185307 / 52.0)) * noise(rng));
    }
    return v;
}

}  // namespace

TEST_CASE("weekly-mean index matches direct averaging and ignores partial years") {
    std::mt19937 rng(1);
    const auto v = three_years(rng);
    const auto s = testing::dense_series(v, {2019, 1});
    const auto table = seasonal_index(s);
    CHECK(table.years == std::vector<int>{2019, 2020, 2021});
    REQUIRE(table.entries.size() == 53);

    const std::vector<std::vector<double>> years{
        {v.begin(), v.begin() + 52}, {v.begin() + 52, v.begin() + 105}, {v.begin() + 105, v.begin() + 157}};
    const auto expected = oracle::seasonal_index(years);
    for (const auto& e : table.entries) {
        CHECK(e.index == doctest::Approx(expected.at(e.iso_week)).epsilon(1e-12));
        CHECK(e.support == (e.iso_week == 53 ? 1 : 3));
    }
    CHECK(normalization_holds(table));
}

TEST_CASE("constant input gives a flat index at 100 under both methods") {
    const auto s = testing::dense_series(std::vector<double>(52 * 4, 250.0), {2021, 1});
    for (const auto method : {SeasonalMethod::WeeklyMean, SeasonalMethod::RatioToMovingAverage}) {
        const auto table = seasonal_index(s, method);
        REQUIRE_FALSE(table.entries.empty());
        for (const auto& e : table.entries) CHECK(e.index == doctest::Approx(100.0).epsilon(1e-12));
    }
}

TEST_CASE("moving-average index is normalized and scale invariant") {
    std::mt19937 rng(2);
    const auto v = three_years(rng);
    const auto s = testing::dense_series(v, {2019, 1});
    const auto table = seasonal_index(s, SeasonalMethod::RatioToMovingAverage);
    CHECK(normalization_holds(table));
    std::vector<double> scaled;
    for (double x : v) scaled.push_back(x * 37.5);
    const auto t2 = seasonal_index(testing::dense_series(scaled, {2019, 1}), SeasonalMethod::RatioToMovingAverage);
    REQUIRE(t2.entries.size() == table.entries.size());
    for (std::size_t k = 0; k < table.entries.size(); ++k) {
        CHECK(t2.entries[k].index == doctest::Approx(table.entries[k].index).epsilon(1e-9));
    }
}

TEST_CASE("one complete year is not enough") {
    const auto s = testing::dense_series(std::vector<double>(60, 1.0), {2021, 1});
    CHECK_THROWS_AS((void)seasonal_index(s), InsufficientDataError);
}
