#include "seasonwarp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "seasonwarp/error.hpp"

namespace seasonwarp::stats {

namespace {

void require(std::span<const double> values, std::size_t n, const char* what) {
    if (values.size() < n) {
        throw InsufficientDataError(std::string(what) + " needs at least " + std::to_string(n) +
                                    " values, got " + std::to_string(values.size()));
    }
}

struct CentralMoments {
    double mean;
    double m2;
    double m3;
    double m4;
};

// Two-pass: mean first, then 1/n central moments.
CentralMoments central_moments(std::span<const double> values) {
    const double mu = mean(values);
    double s2 = 0.0, s3 = 0.0, s4 = 0.0;
    for (const double v : values) {
        const double d = v - mu;
        const double d2 = d * d;
        s2 += d2;
        s3 += d2 * d;
        s4 += d2 * d2;
    }
    const auto n = static_cast<double>(values.size());
    return {mu, s2 / n, s3 / n, s4 / n};
}

void require_variance(const CentralMoments& cm, const char* what) {
    if (!(cm.m2 > 0.0)) {
        throw DegenerateVarianceError(std::string(what) + " is undefined for zero-variance data");
    }
}

}  // namespace

double quantile(std::span<const double> values, double q) {
    require(values, 1, "quantile");
    if (!(q >= 0.0 && q <= 1.0)) throw DomainError("quantile level must lie in [0, 1]");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double h = static_cast<double>(sorted.size() - 1) * q;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = static_cast<std::size_t>(std::ceil(h));
    const double frac = h - static_cast<double>(lo);
    if (lo == hi || frac == 0.0) return sorted[lo];
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

double mean(std::span<const double> values) {
    require(values, 1, "mean");
    double sum = 0.0;
    for (const double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

double sample_std(std::span<const double> values) {
    require(values, 2, "standard deviation");
    const auto cm = central_moments(values);
    const auto n = static_cast<double>(values.size());
    return std::sqrt(cm.m2 * n / (n - 1.0));
}

double skewness(std::span<const double> values) {
    require(values, 3, "skewness");
    const auto cm = central_moments(values);
    require_variance(cm, "skewness");
    return cm.m3 / std::pow(cm.m2, 1.5);
}

double excess_kurtosis(std::span<const double> values) {
    require(values, 4, "kurtosis");
    const auto cm = central_moments(values);
    require_variance(cm, "kurtosis");
    return cm.m4 / (cm.m2 * cm.m2) - 3.0;
}

Moments moments(std::span<const double> values) {
    require(values, 4, "moments");
    const auto cm = central_moments(values);
    require_variance(cm, "skewness");
    const auto n = static_cast<double>(values.size());
    return Moments{
        cm.mean,
        std::sqrt(cm.m2 * n / (n - 1.0)),
        cm.m3 / std::pow(cm.m2, 1.5),
        cm.m4 / (cm.m2 * cm.m2) - 3.0,
    };
}

JarqueBeraResult jarque_bera_from_moments(std::size_t n, double skew, double kurtosis_excess) {
    const double jb =
        static_cast<double>(n) / 6.0 * (skew * skew + kurtosis_excess * kurtosis_excess / 4.0);
    return {jb, std::exp(-jb / 2.0)};
}

JarqueBeraResult jarque_bera(std::span<const double> values) {
    require(values, 8, "jarque_bera");
    const auto m = moments(values);
    return jarque_bera_from_moments(values.size(), m.skewness, m.kurtosis_excess);
}

DescriptiveSummary describe(std::span<const double> values) {
    require(values, 8, "describe (jarque_bera)");
    const auto m = moments(values);
    const auto jb = jarque_bera_from_moments(values.size(), m.skewness, m.kurtosis_excess);
    DescriptiveSummary s;
    s.count = values.size();
    s.mean = m.mean;
    s.std = m.std_sample;
    s.cv_percent = m.mean != 0.0 ? 100.0 * m.std_sample / m.mean : 0.0;
    s.skewness = m.skewness;
    s.kurtosis_excess = m.kurtosis_excess;
    s.min = quantile(values, 0.0);
    s.p25 = quantile(values, 0.25);
    s.median = quantile(values, 0.5);
    s.p75 = quantile(values, 0.75);
    s.max = quantile(values, 1.0);
    s.jb_statistic = jb.statistic;
    s.jb_p_value = jb.p_value;
    return s;
}

DescriptiveSummary describe(const WeeklySeries& series) {
    const auto values = series.values();
    return describe(std::span<const double>(values));
}

}  // namespace seasonwarp::stats
