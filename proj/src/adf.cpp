#include "seasonwarp/adf.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "seasonwarp/error.hpp"

namespace seasonwarp {

namespace {

constexpr std::size_t kMinRows = 20;

// MacKinnon (1994) response surfaces for a single-variable tau test, as
// tabulated in MacKinnon's "Approximate asymptotic distribution functions for
// unit-root and cointegration tests" (JBES 12(2), 1994, Table 3) and shipped
// by statsmodels (tsa/adfvalues.py, N = 1 rows, scaling already applied).
// p = Phi(poly(tau)); the small-p polynomial applies for tau <= tau_star.
struct ResponseSurface {
    double tau_star;
    double tau_min;
    double tau_max;
    std::array<double, 3> small_p;
    std::array<double, 4> large_p;
};

constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr ResponseSurface kSurfaceNone{
    -1.04, -19.04, kInf, {0.6344, 1.2378, 0.032496}, {0.4797, 0.93557, -0.06999, 0.033066}};
constexpr ResponseSurface kSurfaceConstant{
    -1.61, -18.83, 2.74, {2.1659, 1.4412, 0.038269}, {1.7339, 0.93202, -0.12745, -0.010368}};
constexpr ResponseSurface kSurfaceTrend{
    -2.89, -16.18, 0.7, {3.2512, 1.6047, 0.049588}, {2.5261, 0.61654, -0.37956, -0.060285}};

const ResponseSurface& surface(AdfRegression regression) {
    switch (regression) {
        case AdfRegression::None: return kSurfaceNone;
        case AdfRegression::Constant: return kSurfaceConstant;
        case AdfRegression::ConstantTrend: return kSurfaceTrend;
    }
    return kSurfaceConstant;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

int deterministic_terms(AdfRegression regression) {
    switch (regression) {
        case AdfRegression::None: return 0;
        case AdfRegression::Constant: return 1;
        case AdfRegression::ConstantTrend: return 2;
    }
    return 1;
}

struct Fit {
    double tau;
    double aic;
    std::size_t rows;
};

// OLS of dy[t] on y[t], dy[t-1..t-lag] and deterministic terms for
// t = first_row .. dy.size()-1.
Fit fit_lag(std::span<const double> y, std::span<const double> dy, int lag, std::size_t first_row,
            AdfRegression regression) {
    const std::size_t rows = dy.size() - first_row;
    const int det = deterministic_terms(regression);
    const int cols = 1 + lag + det;

    Eigen::MatrixXd x(static_cast<Eigen::Index>(rows), cols);
    Eigen::VectorXd response(static_cast<Eigen::Index>(rows));
    for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t t = first_row + r;
        const auto row = static_cast<Eigen::Index>(r);
        response(row) = dy[t];
        x(row, 0) = y[t];
        for (int i = 1; i <= lag; ++i) x(row, i) = dy[t - static_cast<std::size_t>(i)];
        if (det >= 1) x(row, 1 + lag) = 1.0;
        if (det >= 2) x(row, 2 + lag) = static_cast<double>(r + 1);
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(x);
    if (qr.rank() < cols) {
        throw NumericalDegeneracyError("ADF regressor matrix is singular (lag " +
                                       std::to_string(lag) + ")");
    }
    const Eigen::VectorXd beta = qr.solve(response);
    const Eigen::VectorXd resid = response - x * beta;
    const double ssr = resid.squaredNorm();
    const auto nobs = static_cast<double>(rows);
    const double sigma2 = ssr / (nobs - cols);
    const Eigen::MatrixXd xtx_inv =
        (x.transpose() * x).ldlt().solve(Eigen::MatrixXd::Identity(cols, cols));
    const double se = std::sqrt(sigma2 * xtx_inv(0, 0));
    if (!(se > 0.0) || !std::isfinite(se)) {
        throw NumericalDegeneracyError("ADF regression has zero residual variance");
    }
    const double llf = -nobs / 2.0 * (std::log(2.0 * std::numbers::pi) + std::log(ssr / nobs) + 1.0);
    return {beta(0) / se, -2.0 * llf + 2.0 * cols, rows};
}

}  // namespace

std::string_view to_string(AdfRegression regression) {
    switch (regression) {
        case AdfRegression::None: return "none";
        case AdfRegression::Constant: return "constant";
        case AdfRegression::ConstantTrend: return "constant+trend";
    }
    return "unknown";
}

int schwert_max_lag(std::size_t n) {
    return static_cast<int>(std::floor(12.0 * std::pow(static_cast<double>(n) / 100.0, 0.25)));
}

double adf_p_value(double tau, AdfRegression regression) {
    const ResponseSurface& s = surface(regression);
    if (tau > s.tau_max) return 1.0;
    if (tau < s.tau_min) return 0.0;
    double z = 0.0;
    if (tau <= s.tau_star) {
        z = s.small_p[0] + tau * (s.small_p[1] + tau * s.small_p[2]);
    } else {
        z = s.large_p[0] + tau * (s.large_p[1] + tau * (s.large_p[2] + tau * s.large_p[3]));
    }
    return normal_cdf(z);
}

AdfResult adf_test(std::span<const double> values, std::optional<int> max_lag,
                   AdfRegression regression) {
    for (const double v : values) {
        if (!std::isfinite(v)) throw InvalidInputError("adf_test input contains non-finite values");
    }
    if (values.size() < kMinRows + 2) {
        throw InsufficientDataError("adf_test needs at least " + std::to_string(kMinRows + 2) +
                                    " values, got " + std::to_string(values.size()));
    }
    if (max_lag && *max_lag < 0) throw DomainError("max_lag must be non-negative");

    const std::size_t n = values.size();
    int lag_cap = max_lag.value_or(schwert_max_lag(n));
    if (!max_lag) {
        // Keep every candidate regression well identified on short inputs.
        const int identified = static_cast<int>(n / 2) - deterministic_terms(regression) - 1;
        lag_cap = std::max(0, std::min(lag_cap, identified));
    }
    const std::size_t dy_size = n - 1;
    if (static_cast<std::size_t>(lag_cap) + kMinRows > dy_size) {
        throw InsufficientDataError("adf_test: " + std::to_string(n) + " values leave fewer than " +
                                    std::to_string(kMinRows) + " rows at max lag " +
                                    std::to_string(lag_cap));
    }

    std::vector<double> dy(dy_size);
    for (std::size_t t = 0; t < dy_size; ++t) dy[t] = values[t + 1] - values[t];

    int best_lag = 0;
    if (lag_cap > 0) {
        double best_aic = kInf;
        const auto common_start = static_cast<std::size_t>(lag_cap);
        for (int lag = 0; lag <= lag_cap; ++lag) {
            const Fit f = fit_lag(values, dy, lag, common_start, regression);
            if (f.aic < best_aic) {
                best_aic = f.aic;
                best_lag = lag;
            }
        }
    }

    const Fit final_fit =
        fit_lag(values, dy, best_lag, static_cast<std::size_t>(best_lag), regression);
    AdfResult result;
    result.test_statistic = final_fit.tau;
    result.p_value = adf_p_value(final_fit.tau, regression);
    result.lags_used = best_lag;
    result.n_effective = static_cast<int>(final_fit.rows);
    result.reject_at_1pct = result.p_value < 0.01;
    result.regression = regression;
    return result;
}

}  // namespace seasonwarp
