#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "seasonwarp/error.hpp"
#include "seasonwarp/stats.hpp"

using namespace seasonwarp;
using namespace seasonwarp::stats;

TEST_CASE("quantile equals the rank-interpolation oracle exactly") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> val(-20, 20);
    for (std::size_t n = 1; n <= 8; ++n) {
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<double> v(n);
            for (auto& x : v) x = val(rng) / 4.0;
            for (int k = 0; k <= 100; ++k) {
                const double q = k / 100.0;
                REQUIRE(quantile(v, q) == oracle::quantile(v, q));
            }
        }
    }
}

TEST_CASE("quantile known values and domain") {
    const std::vector<double> v{1, 2, 3, 4};
    CHECK(quantile(v, 0.25) == 1.75);
    CHECK(quantile(v, 0.5) == 2.5);
    CHECK(quantile(v, 1.0) == 4.0);
    CHECK_THROWS_AS((void)quantile(v, 1.5), DomainError);
    CHECK_THROWS_AS((void)quantile(std::vector<double>{}, 0.5), InsufficientDataError);
}

TEST_CASE("moments agree with the direct-summation oracle") {
    std::mt19937 rng(5);
    std::lognormal_distribution<double> d(1.0, 0.8);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> v(4 + trial * 3);
        for (auto& x : v) x = d(rng);
        const auto m = moments(v);
        const auto o = oracle::moments(v);
        CHECK(m.mean == doctest::Approx(o.mean).epsilon(1e-10));
        CHECK(m.std_sample == doctest::Approx(o.std_sample).epsilon(1e-10));
        CHECK(m.skewness == doctest::Approx(o.skewness).epsilon(1e-10));
        CHECK(m.kurtosis_excess == doctest::Approx(o.kurtosis_excess).epsilon(1e-10));
    }
}

TEST_CASE("moment errors") {
    CHECK_THROWS_AS((void)moments(std::vector<double>{1, 1, 1, 1}), DegenerateVarianceError);
    CHECK_THROWS_AS((void)moments(std::vector<double>{1, 2, 3}), InsufficientDataError);
}

TEST_CASE("jarque-bera") {
    const std::vector<double> flat{-1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1};
    const auto jb = jarque_bera(flat);
    CHECK(jb.statistic == 0.0);
    CHECK(jb.p_value == 1.0);
    // n = 60, S = 1, K = 2: JB = 10 * (1 + 1) = 20, p = exp(-10).
    const auto r = jarque_bera_from_moments(60, 1.0, 2.0);
    CHECK(r.statistic == doctest::Approx(20.0));
    CHECK(r.p_value == doctest::Approx(std::exp(-10.0)));
    CHECK_THROWS_AS((void)jarque_bera(std::vector<double>{1, 2, 3, 4, 5}), InsufficientDataError);
}

TEST_CASE("describe identities") {
    std::mt19937 rng(9);
    std::gamma_distribution<double> g(2.0, 3.0);
    std::vector<double> v(300);
    for (auto& x : v) x = g(rng);
    const auto s = describe(v);
    CHECK(s.count == 300);
    CHECK(s.cv_percent == doctest::Approx(100.0 * s.std / s.mean));
    CHECK(s.min <= s.p25);
    CHECK(s.p25 <= s.median);
    CHECK(s.median <= s.p75);
    CHECK(s.p75 <= s.max);
    CHECK(s.skewness > 0.0);
}

TEST_CASE("describe on two values names the failing statistic") {
    try {
        (void)describe(std::vector<double>{1, 2});
        FAIL("expected InsufficientDataError");
    } catch (const InsufficientDataError& e) {
        CHECK(std::string(e.what()).find("jarque_bera") != std::string::npos);
    }
}
