#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace seasonwarp {

/// Deterministic terms included in the Dickey-Fuller regression.
enum class AdfRegression { None, Constant, ConstantTrend };

[[nodiscard]] std::string_view to_string(AdfRegression regression);

struct AdfResult {
    double test_statistic = 0.0;
    double p_value = 1.0;
    int lags_used = 0;
    int n_effective = 0;  ///< observations in the final regression
    bool reject_at_1pct = false;
    AdfRegression regression = AdfRegression::Constant;

    friend bool operator==(const AdfResult&, const AdfResult&) = default;
};

/// floor(12 * (n / 100)^(1/4)).
[[nodiscard]] int schwert_max_lag(std::size_t n);

/// Approximate asymptotic p-value of a Dickey-Fuller tau statistic.
[[nodiscard]] double adf_p_value(double tau, AdfRegression regression);

/// Augmented Dickey-Fuller unit-root test.
///
/// Fits dy_t = [a + b t] + g y_{t-1} + sum_{i=1..p} c_i dy_{t-i} + e_t by OLS
/// and reports g / se(g). The lag p minimises AIC over 0..max_lag on a common
/// sample; the chosen model is then refit on all available rows. When
/// `max_lag` is absent the Schwert rule is used.
///
/// Throws InsufficientDataError when fewer than 20 rows remain after
/// differencing and lag trimming, and NumericalDegeneracyError when the
/// regressors are collinear (e.g. constant input).
[[nodiscard]] AdfResult adf_test(std::span<const double> values,
                                 std::optional<int> max_lag = std::nullopt,
                                 AdfRegression regression = AdfRegression::Constant);

}  // namespace seasonwarp
