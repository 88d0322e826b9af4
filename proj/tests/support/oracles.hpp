#pragma once

// Slow, direct reference implementations used to cross-check the library.
// None of these call into seasonwarp.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <ctime>
#include <limits>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

// Minimum cost over every monotone, continuous path from (0,0) to (n-1,m-1).
inline double dtw_exhaustive(const std::vector<double>& x, const std::vector<double>& y) {
    double best = std::numeric_limits<double>::infinity();
    auto walk = [&](auto&& self, std::size_t i, std::size_t j, double acc) -> void {
        acc += std::abs(x[i] - y[j]);
        if (i + 1 == x.size() && j + 1 == y.size()) {
            best = std::min(best, acc);
            return;
        }
        if (i + 1 < x.size()) self(self, i + 1, j, acc);
        if (j + 1 < y.size()) self(self, i, j + 1, acc);
        if (i + 1 < x.size() && j + 1 < y.size()) self(self, i + 1, j + 1, acc);
    };
    walk(walk, 0, 0, 0.0);
    return best;
}

// Rank interpolation: position h = (n-1)q between order statistics.
inline double quantile(std::vector<double> v, double q) {
    for (std::size_t a = 1; a < v.size(); ++a) {
        for (std::size_t b = a; b > 0 && v[b - 1] > v[b]; --b) std::swap(v[b - 1], v[b]);
    }
    const double h = (static_cast<double>(v.size()) - 1.0) * q;
    const double below = std::floor(h);
    const auto j = static_cast<std::size_t>(below);
    if (h == below) return v[j];
    return v[j] + (h - below) * (v[j + 1] - v[j]);
}

struct Moments {
    double mean, std_sample, skewness, kurtosis_excess;
};

inline Moments moments(const std::vector<double>& v) {
    long double n = static_cast<long double>(v.size());
    long double s = 0;
    for (double a : v) s += a;
    const long double mu = s / n;
    long double m2 = 0, m3 = 0, m4 = 0;
    for (double a : v) {
        const long double d = a - mu;
        m2 += std::pow(d, 2);
        m3 += std::pow(d, 3);
        m4 += std::pow(d, 4);
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;
    return {static_cast<double>(mu), static_cast<double>(std::sqrt(m2 * n / (n - 1))),
            static_cast<double>(m3 / std::pow(m2, 1.5L)),
            static_cast<double>(m4 / (m2 * m2) - 3)};
}

// Natural cubic spline through (x, y): dense linear system for the second
// derivatives solved by Gaussian elimination with partial pivoting, then the
// polynomial a + b t + c t^2 + d t^3 on the containing interval.
class Spline {
public:
    Spline(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
        const std::size_t n = x_.size();
        std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
        a[0][0] = 1.0;
        a[n - 1][n - 1] = 1.0;
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double h0 = x_[i] - x_[i - 1];
            const double h1 = x_[i + 1] - x_[i];
            a[i][i - 1] = h0;
            a[i][i] = 2.0 * (h0 + h1);
            a[i][i + 1] = h1;
            a[i][n] = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
        }
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t p = c;
            for (std::size_t r = c + 1; r < n; ++r) {
                if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
            }
            std::swap(a[c], a[p]);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == c || a[r][c] == 0.0) continue;
                const double f = a[r][c] / a[c][c];
                for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
            }
        }
        m_.resize(n);
        for (std::size_t i = 0; i < n; ++i) m_[i] = a[i][n] / a[i][i];
    }

    double operator()(double t) const {
        std::size_t k = 0;
        while (k + 2 < x_.size() && t > x_[k + 1]) ++k;
        const double h = x_[k + 1] - x_[k];
        const double b = (y_[k + 1] - y_[k]) / h - h * (2.0 * m_[k] + m_[k + 1]) / 6.0;
        const double c = m_[k] / 2.0;
        const double d = (m_[k + 1] - m_[k]) / (6.0 * h);
        const double u = t - x_[k];
        return y_[k] + u * (b + u * (c + u * d));
    }

private:
    std::vector<double> x_, y_, m_;
};

// ISO year and week from the C library's strftime.
inline std::pair<int, int> iso_week(int year, int month, int day) {
    std::tm tm{};
    tm.tm_year = year - 1900;
    tm.tm_mon = month - 1;
    tm.tm_mday = day;
    tm.tm_hour = 12;
    std::time_t t = timegm(&tm);
    std::tm out{};
    gmtime_r(&t, &out);
    char g[8], v[4];
    std::strftime(g, sizeof g, "%G", &out);
    std::strftime(v, sizeof v, "%V", &out);
    return {std::atoi(g), std::atoi(v)};
}

// Mean of each week position across years, over the grand mean, times 100.
inline std::map<int, double> seasonal_index(const std::vector<std::vector<double>>& years) {
    std::map<int, std::vector<double>> by_week;
    std::vector<double> all;
    for (const auto& y : years) {
        for (std::size_t w = 0; w < y.size(); ++w) {
            by_week[static_cast<int>(w) + 1].push_back(y[w]);
            all.push_back(y[w]);
        }
    }
    long double grand = 0;
    for (double v : all) grand += v;
    grand /= all.size();
    std::map<int, double> out;
    for (const auto& [w, vals] : by_week) {
        long double s = 0;
        for (double v : vals) s += v;
        out[w] = static_cast<double>(100.0L * (s / vals.size()) / grand);
    }
    return out;
}

}  // namespace oracle
