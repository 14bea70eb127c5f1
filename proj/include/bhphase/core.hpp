#pragma once

// Planar traveling-wave field of the Burgers-Huxley equation
//
//   x' = y,   y' = -c y + x^k y + x (x^n - 1),
//
// obtained from w_t + w^k w_z = w_zz + w (1 - w^n) with w(z,t) = phi(z - c t),
// (x, y) = (phi, phi'). Only m = 1 and n in {1, 2} are supported.

#include <array>
#include <cmath>
#include <string_view>

namespace bh {

/// Integer power by repeated squaring; k >= 0.
constexpr double ipow(double x, int k) noexcept {
  double result = 1.0;
  double base = x;
  unsigned e = static_cast<unsigned>(k);
  while (e != 0U) {
    if ((e & 1U) != 0U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) noexcept { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) noexcept { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) noexcept { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

inline double dot(Vec2 a, Vec2 b) noexcept { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) noexcept { return std::hypot(a.x, a.y); }

/// Row-major 2x2 matrix.
struct Mat2 {
  std::array<double, 4> a{};

  constexpr double operator()(int i, int j) const noexcept { return a[static_cast<std::size_t>(2 * i + j)]; }
  constexpr double& operator()(int i, int j) noexcept { return a[static_cast<std::size_t>(2 * i + j)]; }

  constexpr double trace() const noexcept { return a[0] + a[3]; }
  constexpr double det() const noexcept { return a[0] * a[3] - a[1] * a[2]; }
  constexpr Vec2 apply(Vec2 v) const noexcept { return {a[0] * v.x + a[1] * v.y, a[2] * v.x + a[3] * v.y}; }
};

/// Parameter tuple (n, k, c) with m frozen at 1.
class Params {
 public:
  /// Throws ParameterError unless n in {1,2}, k >= 1, c > 0 (finite) and m == 1.
  Params(int n, int k, double c, int m = 1);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  double c() const noexcept { return c_; }
  int m() const noexcept { return m_; }

  /// Degree of the polynomial field: max(k + 1, n + 1).
  int degree() const noexcept { return k_ + 1 > n_ + 1 ? k_ + 1 : n_ + 1; }

  friend bool operator==(const Params&, const Params&) = default;

 private:
  int n_;
  int k_;
  double c_;
  int m_;
};

/// State (x, y) = (phi, phi') together with the independent variable s = xi.
struct PhasePoint {
  double x = 0.0;
  double y = 0.0;
  double s = 0.0;

  constexpr Vec2 xy() const noexcept { return {x, y}; }
};

Vec2 eval_field(const Params& p, Vec2 xy) noexcept;
inline Vec2 eval_field(const Params& p, const PhasePoint& pt) noexcept { return eval_field(p, pt.xy()); }

/// [[0, 1], [(1+n) x^n + k x^(k-1) y - 1, x^k - c]]
Mat2 jacobian(const Params& p, Vec2 xy) noexcept;
inline Mat2 jacobian(const Params& p, const PhasePoint& pt) noexcept { return jacobian(p, pt.xy()); }

/// x^k - c
double divergence(const Params& p, Vec2 xy) noexcept;
inline double divergence(const Params& p, const PhasePoint& pt) noexcept { return divergence(p, pt.xy()); }

enum class RegionTag { B1, B2 };

std::string_view to_string(RegionTag tag) noexcept;

struct RegionTest {
  bool inside = false;
  RegionTag tag = RegionTag::B1;
};

/// Region where the divergence is strictly negative: B1 = {x < c^(1/k)} for odd k,
/// B2 = {|x| < c^(1/k)} for even k. Both are exactly {x^k < c}, so the
/// boundary x^k = c is excluded.
RegionTag bendixson_region(const Params& p) noexcept;
RegionTest in_bendixson_region(const Params& p, Vec2 xy) noexcept;
inline RegionTest in_bendixson_region(const Params& p, const PhasePoint& pt) noexcept {
  return in_bendixson_region(p, pt.xy());
}

/// c^(1/k), the abscissa bounding the Bendixson region.
double bendixson_bound(const Params& p) noexcept;

}  // namespace bh
