#include "seasonwarp/spline.hpp"

#include <algorithm>
#include <string>

#include "seasonwarp/error.hpp"

namespace seasonwarp {

NaturalCubicSpline::NaturalCubicSpline(std::span<const double> x, std::span<const double> y)
    : x_(x.begin(), x.end()), y_(y.begin(), y.end()), m_(x.size(), 0.0) {
    if (x.size() != y.size()) throw DomainError("spline knots: x and y differ in length");
    if (x.size() < 2) {
        throw InsufficientDataError("spline needs at least 2 knots, got " +
                                    std::to_string(x.size()));
    }
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (!(x[i] > x[i - 1])) throw DomainError("spline knots must be strictly increasing");
    }

    const std::size_t n = x.size();
    if (n == 2) return;

    // Tridiagonal system for the interior second derivatives m_[1..n-2]
    // (m_[0] = m_[n-1] = 0), solved with the Thomas algorithm.
    const std::size_t k = n - 2;
    std::vector<double> diag(k), upper(k), rhs(k);
    for (std::size_t r = 0; r < k; ++r) {
        const std::size_t i = r + 1;
        const double h0 = x_[i] - x_[i - 1];
        const double h1 = x_[i + 1] - x_[i];
        diag[r] = 2.0 * (h0 + h1);
        upper[r] = h1;
        rhs[r] = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
    }
    for (std::size_t r = 1; r < k; ++r) {
        const double lower = x_[r + 1] - x_[r];  // h_{i-1} for row r
        const double w = lower / diag[r - 1];
        diag[r] -= w * upper[r - 1];
        rhs[r] -= w * rhs[r - 1];
    }
    m_[k] = rhs[k - 1] / diag[k - 1];
    for (std::size_t r = k - 1; r-- > 0;) {
        m_[r + 1] = (rhs[r] - upper[r] * m_[r + 2]) / diag[r];
    }
}

double NaturalCubicSpline::operator()(double t) const {
    const auto it = std::upper_bound(x_.begin() + 1, x_.end() - 1, t);
    const std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
    if (t == x_[i]) return y_[i];
    if (t == x_[i + 1]) return y_[i + 1];
    const double h = x_[i + 1] - x_[i];
    const double a = x_[i + 1] - t;
    const double b = t - x_[i];
    return m_[i] * a * a * a / (6.0 * h) + m_[i + 1] * b * b * b / (6.0 * h) +
           (y_[i] / h - m_[i] * h / 6.0) * a + (y_[i + 1] / h - m_[i + 1] * h / 6.0) * b;
}

}  // namespace seasonwarp
