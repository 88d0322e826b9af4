#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "seasonwarp/cleaning.hpp"
#include "seasonwarp/error.hpp"
#include "seasonwarp/spline.hpp"

using namespace seasonwarp;

namespace {

// Drops the listed offsets from a dense series.
WeeklySeries with_gaps(const std::vector<double>& values, const std::vector<std::size_t>& gaps,
                       WeekKey start = {2015, 1}) {
    std::vector<SeriesPoint> pts;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (std::find(gaps.begin(), gaps.end(), k) != gaps.end()) continue;
        pts.push_back({advance(start, static_cast<long>(k)), values[k]});
    }
    return WeeklySeries(Variable::ModalPrice, std::move(pts));
}

}  // namespace

TEST_CASE("natural spline reproduces knots exactly and lines to 1e-12") {
    const std::vector<double> x{0, 1, 3, 4, 7, 8};
    const std::vector<double> y{2, -1, 5, 4, 0.5, 3};
    const NaturalCubicSpline s(x, y);
    for (std::size_t k = 0; k < x.size(); ++k) CHECK(s(x[k]) == y[k]);
    CHECK(s.second_derivatives().front() == 0.0);
    CHECK(s.second_derivatives().back() == 0.0);

    std::vector<double> ly;
    for (double v : x) ly.push_back(3.5 * v - 2.0);
    const NaturalCubicSpline line(x, ly);
    for (double t = 0; t <= 8; t += 0.125) CHECK(std::abs(line(t) - (3.5 * t - 2.0)) <= 1e-12);
}

TEST_CASE("natural spline matches the dense-solve oracle") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> val(-10, 10);
    std::uniform_int_distribution<int> step(1, 4);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> x{0}, y{val(rng)};
        const int n = 2 + trial % 12;
        for (int k = 1; k < n; ++k) {
            x.push_back(x.back() + step(rng));
            y.push_back(val(rng));
        }
        const NaturalCubicSpline s(x, y);
        const oracle::Spline o(x, y);
        for (double t = x.front(); t <= x.back(); t += 0.25) CHECK(s(t) == doctest::Approx(o(t)).epsilon(1e-9));
    }
}

TEST_CASE("spline rejects bad knots") {
    CHECK_THROWS((void)NaturalCubicSpline(std::vector<double>{0}, std::vector<double>{1}));
    CHECK_THROWS((void)NaturalCubicSpline(std::vector<double>{0, 0}, std::vector<double>{1, 2}));
}

TEST_CASE("spline_fill lists exactly the missing weeks and keeps observed values") {
    std::vector<double> v(40);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = 100 + 10 * std::sin(0.3 * k);
    const auto s = with_gaps(v, {5, 6, 20, 33});
    const auto filled = spline_fill(s);
    REQUIRE(filled.series.size() == 40);
    CHECK(filled.series.is_dense());
    CHECK(filled.report.interpolated_weeks ==
          std::vector<WeekKey>{advance({2015, 1}, 5), advance({2015, 1}, 6), advance({2015, 1}, 20),
                               advance({2015, 1}, 33)});
    CHECK(filled.report.missing_fraction == doctest::Approx(4.0 / 40.0));
    for (std::size_t k = 0; k < 40; ++k) {
        const auto& p = filled.series.points()[k];
        if (p.flag == PointFlag::Observed) CHECK(p.value == v[k]);
        else CHECK(std::abs(p.value - v[k]) < 2.0);
    }
}

TEST_CASE("dense input passes through unchanged") {
    const auto s = testing::dense_series({5, 6, 7, 8, 9});
    const auto filled = spline_fill(s);
    CHECK(filled.series == s);
    CHECK(filled.report.interpolated_weeks.empty());
    CHECK(filled.report.missing_fraction == 0.0);
}

TEST_CASE("negative interpolants are clamped to zero and reported") {
    const auto s = with_gaps({100, 100, 100, 0, 50, 50, 0, 0}, {4, 5});
    const auto filled = spline_fill(s);
    CHECK_FALSE(filled.report.clamped_weeks.empty());
    for (const auto& p : filled.series.points()) CHECK(p.value >= 0.0);
}

TEST_CASE("spline_fill needs four points") {
    CHECK_THROWS_AS((void)spline_fill(with_gaps({1, 2, 3, 4}, {1})), InsufficientDataError);
}

TEST_CASE("iqr_outliers with 3xIQR fences") {
    std::vector<double> v{10, 11, 12, 13, 14, 15, 16, 17, 100, -40};
    // Q1 = 11.25, Q3 = 16.75, IQR = 5.5, fences -5.25 and 33.25.
    const auto flags = iqr_outliers(v, 3.0);
    REQUIRE(flags.size() == 2);
    CHECK(flags[0].index == 8);
    CHECK(flags[0].fence == Fence::High);
    CHECK(flags[1].index == 9);
    CHECK(flags[1].fence == Fence::Low);
    CHECK(iqr_outliers(v, std::numeric_limits<double>::infinity()).empty());
    CHECK_THROWS_AS((void)iqr_outliers(std::vector<double>{1, 2, 3}), InsufficientDataError);
}

TEST_CASE("clean_series retains outliers by default and winsorizes on request") {
    std::vector<double> v(30, 10.0);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += static_cast<double>(k % 5);
    v[12] = 500.0;
    const auto s = testing::dense_series(v);

    const auto kept = clean_series(s);
    REQUIRE(kept.report.outlier_weeks.size() == 1);
    CHECK(kept.report.outlier_weeks[0].week == advance({2015, 1}, 12));
    CHECK(kept.series.points()[12].value == 500.0);
    CHECK(kept.series.points()[12].flag == PointFlag::OutlierRetained);
    CHECK_FALSE(kept.report.winsorized);

    const auto clamped = clean_series(s, {3.0, true});
    CHECK(clamped.series.points()[12].value == doctest::Approx(clamped.report.high_fence));
    CHECK(clamped.report.winsorized);
}
