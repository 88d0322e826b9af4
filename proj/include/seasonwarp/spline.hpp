#pragma once

#include <span>
#include <vector>

namespace seasonwarp {

/// Interpolating cubic spline with natural boundary conditions (second
/// derivative zero at both end knots). Knot abscissae must be strictly
/// increasing; at least two knots are required.
class NaturalCubicSpline {
public:
    NaturalCubicSpline(std::span<const double> x, std::span<const double> y);

    /// Evaluates the spline. Outside the knot range the end segments' cubics
    /// are extended.
    [[nodiscard]] double operator()(double t) const;

    [[nodiscard]] std::span<const double> second_derivatives() const noexcept { return m_; }

private:
    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> m_;
};

}  // namespace seasonwarp
