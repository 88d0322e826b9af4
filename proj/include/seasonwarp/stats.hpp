#pragma once

#include <cstddef>
#include <span>

#include "seasonwarp/series.hpp"

namespace seasonwarp::stats {

/// Linear-interpolation quantile: position h = (n-1)q in the sorted sample,
/// interpolated between floor(h) and ceil(h). quantile(v, 0) is the minimum
/// and quantile(v, 1) the maximum exactly.
[[nodiscard]] double quantile(std::span<const double> values, double q);

[[nodiscard]] double mean(std::span<const double> values);

/// Sample standard deviation (n-1 denominator); needs n >= 2.
[[nodiscard]] double sample_std(std::span<const double> values);

/// m3 / m2^(3/2) with 1/n central moments; needs n >= 3 and m2 > 0.
[[nodiscard]] double skewness(std::span<const double> values);

/// m4 / m2^2 - 3 with 1/n central moments; needs n >= 4 and m2 > 0.
[[nodiscard]] double excess_kurtosis(std::span<const double> values);

struct Moments {
    double mean = 0.0;
    double std_sample = 0.0;
    double skewness = 0.0;
    double kurtosis_excess = 0.0;
};

/// All four moments at once. Needs n >= 4; throws DegenerateVarianceError for
/// zero-variance input.
[[nodiscard]] Moments moments(std::span<const double> values);

struct JarqueBeraResult {
    double statistic = 0.0;
    double p_value = 1.0;  ///< chi-square(2) survival, exp(-JB/2)
};

/// JB = n/6 (S^2 + K^2/4) from precomputed skewness and excess kurtosis.
[[nodiscard]] JarqueBeraResult jarque_bera_from_moments(std::size_t n, double skewness,
                                                        double kurtosis_excess);

/// Needs n >= 8 and non-degenerate variance.
[[nodiscard]] JarqueBeraResult jarque_bera(std::span<const double> values);

/// One row per metric of a market summary table. Kurtosis is excess kurtosis.
struct DescriptiveSummary {
    std::size_t count = 0;
    double mean = 0.0;
    double std = 0.0;
    double cv_percent = 0.0;
    double skewness = 0.0;
    double kurtosis_excess = 0.0;
    double min = 0.0;
    double p25 = 0.0;
    double median = 0.0;
    double p75 = 0.0;
    double max = 0.0;
    double jb_statistic = 0.0;
    double jb_p_value = 1.0;

    friend bool operator==(const DescriptiveSummary&, const DescriptiveSummary&) = default;
};

[[nodiscard]] DescriptiveSummary describe(std::span<const double> values);
[[nodiscard]] DescriptiveSummary describe(const WeeklySeries& series);

}  // namespace seasonwarp::stats
