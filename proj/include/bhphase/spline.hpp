#pragma once

#include <vector>

namespace bh {

/// Clamped cubic spline on a strictly increasing, possibly non-uniform grid.
class CubicSpline {
 public:
  /// Throws DomainError if the grid is not strictly increasing or has < 2 points.
  CubicSpline(std::vector<double> x, std::vector<double> y, double slope_left, double slope_right);

  double operator()(double t) const;
  double derivative(double t) const;
  double second_derivative(double t) const;

  /// Second derivatives at the knots.
  const std::vector<double>& moments() const noexcept { return m_; }
  /// First derivatives at the knots.
  std::vector<double> knot_slopes() const;

 private:
  std::size_t interval(double t) const;

  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> m_;
};

}  // namespace bh
