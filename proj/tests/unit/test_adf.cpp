#include <doctest.h>

#include <cmath>
#include <vector>

#include "seasonwarp/adf.hpp"
#include "seasonwarp/error.hpp"

using namespace seasonwarp;

// Reference values from statsmodels 0.14 adfuller(..., autolag="AIC").

namespace {

std::vector<double> trig_series() {
    std::vector<double> x(120);
    for (int t = 0; t < 120; ++t) {
        x[t] = std::sin(0.7 * t) + 0.5 * std::cos(1.3 * t) + 0.3 * std::sin(0.11 * t * t);
    }
    return x;
}

std::vector<double> ar_series() {
    std::vector<double> x{0.0};
    for (int t = 1; t < 200; ++t) {
        const double s = std::sin(t * 12.9898) * 43758.5453;
        x.push_back(0.9 * x.back() + (s - std::floor(s) - 0.5));
    }
    return x;
}

}  // namespace

TEST_CASE("adf matches statsmodels with AIC lag selection") {
    struct Case {
        std::vector<double> x;
        int max_lag;
        AdfRegression reg;
        double stat, p;
        int lags, nobs;
    };
    const std::vector<Case> cases{
        {trig_series(), 4, AdfRegression::Constant, -11.16610504229484, 2.711883690394796e-20, 4, 115},
        {trig_series(), 4, AdfRegression::None, -11.107517534427457, 4.3042725268977683e-20, 4, 115},
        {trig_series(), 4, AdfRegression::ConstantTrend, -11.118783027779712, 1.3291283455702575e-17, 4, 115},
        {ar_series(), 8, AdfRegression::Constant, -2.7156443131006354, 0.07137002263140628, 0, 199},
        {ar_series(), 8, AdfRegression::None, -2.703154431548206, 0.006678337407284147, 0, 199},
        {ar_series(), 8, AdfRegression::ConstantTrend, -2.7955803009858338, 0.19857249250640946, 0, 199},
    };
    for (const auto& c : cases) {
        const auto r = adf_test(c.x, c.max_lag, c.reg);
        CHECK(r.test_statistic == doctest::Approx(c.stat).epsilon(1e-8));
        CHECK(r.p_value == doctest::Approx(c.p).epsilon(1e-6));
        CHECK(r.lags_used == c.lags);
        CHECK(r.n_effective == c.nobs);
        CHECK(r.regression == c.reg);
    }
}

TEST_CASE("mackinnon p-values") {
    struct Row {
        double tau, c, n, ct;
    };
    const Row rows[] = {
        {-4.0, 0.0014105112530392603, 7.326906489110129e-05, 0.008793701231094677},
        {-2.5, 0.11547432475870761, 0.012004037384041915, 0.32796229628585105},
        {-1.0, 0.7532643012005655, 0.28810611212633064, 0.9441147109023218},
        {0.5, 0.9848730963065522, 0.824879195252956, 0.996851911498776},
    };
    for (const auto& r : rows) {
        CHECK(adf_p_value(r.tau, AdfRegression::Constant) == doctest::Approx(r.c).epsilon(1e-10));
        CHECK(adf_p_value(r.tau, AdfRegression::None) == doctest::Approx(r.n).epsilon(1e-10));
        CHECK(adf_p_value(r.tau, AdfRegression::ConstantTrend) == doctest::Approx(r.ct).epsilon(1e-10));
    }
    CHECK(adf_p_value(-30.0, AdfRegression::Constant) == 0.0);
    CHECK(adf_p_value(5.0, AdfRegression::Constant) == 1.0);
}

TEST_CASE("schwert rule") {
    CHECK(schwert_max_lag(100) == 12);
    CHECK(schwert_max_lag(500) == 17);
}

TEST_CASE("adf input checks") {
    CHECK_THROWS_AS((void)adf_test(std::vector<double>(10, 1.0)), InsufficientDataError);
    CHECK_THROWS((void)adf_test(std::vector<double>(100, 3.0)));
}
