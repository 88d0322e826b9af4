#include "seasonwarp/fixture.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string>

#include "seasonwarp/csv.hpp"
#include "seasonwarp/error.hpp"

namespace seasonwarp {

namespace {

// Calibration targets: coefficient of variation (percent) and mean level of a
// volatile wholesale tomato market.
constexpr double kArrivalsCv = 101.89;
constexpr double kPriceCv = 77.13;
constexpr double kArrivalsMean = 6772.0;
constexpr double kPriceMean = 1140.0;
constexpr double kSpikeFactor = 4.0;

double bump(double week, double centre, double width) {
    const double z = (week - centre) / width;
    return std::exp(-0.5 * z * z);
}

double cv_percent(const std::vector<double>& v) {
    double mean = 0.0;
    for (const double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double ss = 0.0;
    for (const double x : v) ss += (x - mean) * (x - mean);
    return 100.0 * std::sqrt(ss / static_cast<double>(v.size() - 1)) / mean;
}

// Maps a latent log-series to levels exp(s * (L - mean L)) with s chosen by
// bisection so the levels hit `target_cv`, then rescales to `target_mean`.
std::vector<double> calibrate(const std::vector<double>& latent, double target_cv,
                              double target_mean) {
    double centre = 0.0;
    for (const double x : latent) centre += x;
    centre /= static_cast<double>(latent.size());

    auto levels = [&](double s) {
        std::vector<double> out(latent.size());
        for (std::size_t t = 0; t < latent.size(); ++t) out[t] = std::exp(s * (latent[t] - centre));
        return out;
    };
    double lo = 0.01, hi = 4.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (cv_percent(levels(mid)) < target_cv ? lo : hi) = mid;
    }
    auto out = levels(0.5 * (lo + hi));
    double mean = 0.0;
    for (const double x : out) mean += x;
    mean /= static_cast<double>(out.size());
    for (auto& x : out) x *= target_mean / mean;
    return out;
}

std::string format_date(std::chrono::sys_days day) {
    const std::chrono::year_month_day ymd{day};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

}  // namespace

Fixture generate_fixture(const FixtureOptions& options) {
    if (options.last_year < options.first_year + 1) {
        throw DomainError("fixture needs at least two ISO years");
    }
    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    std::vector<WeekKey> weeks;
    for (int y = options.first_year; y <= options.last_year; ++y) {
        for (int w = 1; w <= weeks_in_iso_year(y); ++w) weeks.push_back({y, w});
    }
    const std::size_t n = weeks.size();
    if (options.gap_count + options.spike_count + 16 > n) {
        throw DomainError("fixture span too short for the requested gaps and spikes");
    }

    std::vector<double> arrival_shift, price_shift;
    for (int y = options.first_year; y <= options.last_year; ++y) {
        arrival_shift.push_back(0.12 * normal(rng));
        price_shift.push_back(0.15 * normal(rng));
    }

    // Latent log levels: two arrival peaks (weeks 5-15, 40-48), prices
    // responding inversely with a mid-year rebound, AR(1) shocks.
    std::vector<double> log_arrivals(n), log_price(n);
    double arrival_noise = 0.0, price_noise = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        const double w = weeks[t].iso_week;
        const auto year = static_cast<std::size_t>(weeks[t].iso_year - options.first_year);
        const double supply = 0.9 * bump(w, 10.0, 3.5) + 1.6 * bump(w, 44.0, 2.8);
        arrival_noise = 0.55 * arrival_noise + 0.52 * normal(rng);
        price_noise = 0.75 * price_noise + 0.34 * normal(rng);
        log_arrivals[t] = supply + arrival_shift[year] + arrival_noise;
        log_price[t] = -0.6 * supply + 0.5 * bump(w, 28.0, 6.0) + price_shift[year] + price_noise -
                       0.25 * arrival_noise;
    }

    Fixture fixture;
    std::uniform_int_distribution<std::size_t> interior(8, n - 9);
    std::set<std::size_t> spikes, gaps;
    while (spikes.size() < options.spike_count) spikes.insert(interior(rng));
    while (gaps.size() < options.gap_count) {
        const std::size_t g = interior(rng);
        if (!spikes.count(g) && !gaps.count(g - 1) && !gaps.count(g + 1)) gaps.insert(g);
    }
    for (const std::size_t s : spikes) {
        log_price[s] += std::log(kSpikeFactor);
        fixture.spike_weeks.push_back(weeks[s]);
    }

    const auto arrivals = calibrate(log_arrivals, kArrivalsCv, kArrivalsMean);
    const auto price = calibrate(log_price, kPriceCv, kPriceMean);

    // The first half of the gaps keep their row with blank cells; the rest
    // drop the row entirely.
    const std::size_t blank_rows = options.gap_count / 2;
    std::size_t gap_index = 0;
    fixture.csv = csv::row({"date", "arrivals", "modal_price"});
    for (std::size_t t = 0; t < n; ++t) {
        const std::string date = format_date(week_ending(weeks[t]));
        if (gaps.count(t)) {
            fixture.gap_weeks.push_back(weeks[t]);
            if (gap_index++ < blank_rows) fixture.csv += csv::row({date, "", ""});
            continue;
        }
        const auto a = static_cast<long long>(std::llround(arrivals[t]));
        const auto p = static_cast<long long>(std::llround(price[t]));
        fixture.csv += csv::row({date, std::to_string(a), std::to_string(p)});
    }
    return fixture;
}

}  // namespace seasonwarp
