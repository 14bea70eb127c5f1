#include "bhphase/spline.hpp"

#include <algorithm>

#include "bhphase/errors.hpp"

namespace bh {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y, double slope_left, double slope_right)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n < 2 || y_.size() != n) throw DomainError("spline needs at least two matching samples");
  for (std::size_t i = 1; i < n; ++i) {
    if (!(x_[i] > x_[i - 1])) throw DomainError("spline grid must be strictly increasing");
  }
  // Tridiagonal system for the moments, solved by the Thomas algorithm.
  std::vector<double> a(n, 0.0), b(n, 0.0), c(n, 0.0), d(n, 0.0);
  const double h0 = x_[1] - x_[0];
  b[0] = h0 / 3.0;
  c[0] = h0 / 6.0;
  d[0] = (y_[1] - y_[0]) / h0 - slope_left;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double hl = x_[i] - x_[i - 1];
    const double hr = x_[i + 1] - x_[i];
    a[i] = hl / 6.0;
    b[i] = (hl + hr) / 3.0;
    c[i] = hr / 6.0;
    d[i] = (y_[i + 1] - y_[i]) / hr - (y_[i] - y_[i - 1]) / hl;
  }
  const double hn = x_[n - 1] - x_[n - 2];
  a[n - 1] = hn / 6.0;
  b[n - 1] = hn / 3.0;
  d[n - 1] = slope_right - (y_[n - 1] - y_[n - 2]) / hn;

  for (std::size_t i = 1; i < n; ++i) {
    const double w = a[i] / b[i - 1];
    b[i] -= w * c[i - 1];
    d[i] -= w * d[i - 1];
  }
  m_.assign(n, 0.0);
  m_[n - 1] = d[n - 1] / b[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) m_[i] = (d[i] - c[i] * m_[i + 1]) / b[i];
}

std::size_t CubicSpline::interval(double t) const {
  const auto it = std::upper_bound(x_.begin(), x_.end(), t);
  std::size_t i = it == x_.begin() ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
  return std::min(i, x_.size() - 2);
}

double CubicSpline::operator()(double t) const {
  const std::size_t i = interval(t);
  const double h = x_[i + 1] - x_[i];
  const double A = (x_[i + 1] - t) / h;
  const double B = (t - x_[i]) / h;
  return A * y_[i] + B * y_[i + 1] + ((A * A * A - A) * m_[i] + (B * B * B - B) * m_[i + 1]) * h * h / 6.0;
}

double CubicSpline::derivative(double t) const {
  const std::size_t i = interval(t);
  const double h = x_[i + 1] - x_[i];
  const double A = (x_[i + 1] - t) / h;
  const double B = (t - x_[i]) / h;
  return (y_[i + 1] - y_[i]) / h - (3.0 * A * A - 1.0) / 6.0 * h * m_[i] + (3.0 * B * B - 1.0) / 6.0 * h * m_[i + 1];
}

double CubicSpline::second_derivative(double t) const {
  const std::size_t i = interval(t);
  const double h = x_[i + 1] - x_[i];
  const double A = (x_[i + 1] - t) / h;
  const double B = (t - x_[i]) / h;
  return A * m_[i] + B * m_[i + 1];
}

std::vector<double> CubicSpline::knot_slopes() const {
  const std::size_t n = x_.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double h = x_[i + 1] - x_[i];
    out[i] = (y_[i + 1] - y_[i]) / h - h * (2.0 * m_[i] + m_[i + 1]) / 6.0;
  }
  const double h = x_[n - 1] - x_[n - 2];
  out[n - 1] = (y_[n - 1] - y_[n - 2]) / h + h * (m_[n - 2] + 2.0 * m_[n - 1]) / 6.0;
  return out;
}

}  // namespace bh
