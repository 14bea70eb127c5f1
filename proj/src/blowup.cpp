#include "bhphase/blowup.hpp"

#include <cmath>
#include <numbers>

#include "bhphase/errors.hpp"

namespace bh {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNudge = 1e-9;
constexpr double kFdStep = 1e-5;

void check_case(const Params& p, BlowupCase bc) {
  if (p.n() == 1 && p.k() == 1) throw ParameterError("n = 1, k = 1 has no blow-up system");
  if (blowup_case(p) != bc) {
    throw ParameterError(std::string("blow-up case ") + std::string(to_string(bc)) + " does not apply to n = " +
                         std::to_string(p.n()) + ", k = " + std::to_string(p.k()));
  }
}

double circle_g(int k, double theta) {
  return ipow(std::cos(theta), k + 1) - (k + 1) * ipow(std::sin(theta), k);
}

// Bisection down to adjacent doubles; g(lo) and g(hi) must have opposite signs.
double bisect(int k, double lo, double hi) {
  double glo = circle_g(k, lo);
  const double ghi = circle_g(k, hi);
  if (!(glo * ghi < 0.0)) throw std::logic_error("circle root not bracketed");
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double gm = circle_g(k, mid);
    if (gm == 0.0) return mid;
    if ((gm < 0.0) == (glo < 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return std::abs(circle_g(k, lo)) <= std::abs(circle_g(k, hi)) ? lo : hi;
}

int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

}  // namespace

std::string_view to_string(BlowupCase bc) noexcept {
  switch (bc) {
    case BlowupCase::Buc1: return "buc1";
    case BlowupCase::Buc2: return "buc2";
    case BlowupCase::Buc3: return "buc3";
  }
  return "?";
}

std::string_view to_string(CircleKind kind) noexcept {
  return kind == CircleKind::Saddle ? "saddle" : "node-or-focus";
}

BlowupCase blowup_case(const Params& p) {
  if (p.n() == 1) {
    if (p.k() == 1) throw ParameterError("n = 1, k = 1 has no blow-up system");
    return BlowupCase::Buc1;
  }
  return p.k() == 1 ? BlowupCase::Buc2 : BlowupCase::Buc3;
}

std::pair<int, int> blowup_weights(const Params& p, BlowupCase bc) {
  check_case(p, bc);
  if (bc == BlowupCase::Buc2) return {1, 2};
  return {p.k(), p.k() + 1};
}

ChartPoint blowup_to_chart(const Params& p, BlowupCase bc, const BlowupPoint& bp) {
  const auto [a, b] = blowup_weights(p, bc);
  return {ChartId::U2, ipow(bp.r, a) * std::cos(bp.theta), ipow(bp.r, b) * std::sin(bp.theta)};
}

Vec2 blowup_field(const Params& p, BlowupCase bc, const BlowupPoint& bp) {
  check_case(p, bc);
  const double r = bp.r;
  const double C = std::cos(bp.theta);
  const double S = std::sin(bp.theta);
  const double c = p.c();
  const int k = p.k();

  if (bc == BlowupCase::Buc2) {
    const double t = bp.theta;
    const double dr = 0.25 * r *
                      (2.0 * c * r + (r * r - 2.0) * C - 2.0 * c * r * std::cos(2.0 * t) -
                       (2.0 + r * r) * std::cos(3.0 * t) - 2.0 * std::sin(2.0 * t));
    const double dt = S * (ipow(C, 4) + C * C * S - 2.0 * S * S) - r * C * (c + r * C) * ipow(S, 3);
    return {dr, dt};
  }

  const double Sk = ipow(S, k);
  const double Sk1 = Sk * S;
  const double rk = ipow(r, k);
  const double head_r = r * (C * Sk - ipow(C, k));
  const double head_t = S * (ipow(C, k + 1) - (1 + k) * Sk);
  if (bc == BlowupCase::Buc1) {
    const double dr = head_r - ipow(r, 2 * k) * C * C * ipow(S, k - 1) + c * rk * r * Sk + ipow(r, 2 * k + 1) * C * Sk;
    const double dt = head_t + ipow(r, 2 * k - 1) * ipow(C, 3) * Sk - c * rk * C * Sk1 - ipow(r, 2 * k) * C * C * Sk1;
    return {dr, dt};
  }
  const double dr = head_r + ipow(r, 2 * k - 1) * (C * Sk - C * ipow(S, k - 2)) + c * rk * r * Sk +
                    ipow(r, 2 * k + 1) * C * Sk;
  const double dt = head_t + ipow(r, 2 * k - 2) * (C * C * ipow(S, k - 1) - C * C * Sk1) -
                    rk * (c * C * Sk1 + rk * C * C * Sk1);
  return {dr, dt};
}

double circle_residual(const Params& p, BlowupCase bc, double theta) {
  return blowup_field(p, bc, {0.0, theta}).y;
}

std::vector<CircleEquilibrium> circle_equilibria(const Params& p, BlowupCase bc) {
  check_case(p, bc);
  std::vector<std::pair<double, std::string>> roots;
  if (bc == BlowupCase::Buc2) {
    const double a = std::asin((std::sqrt(5.0) - 1.0) / 2.0);
    const double b = std::asin(1.0 - std::sqrt(2.0));
    roots = {{0.0, "theta0^1"}, {a, "theta1^1"}, {kPi - a, "theta2^1"},
             {kPi, "theta3^1"}, {kPi - b, "theta4^1"}, {2.0 * kPi + b, "theta5^1"}};
  } else {
    const int k = p.k();
    const double t1 = bisect(k, kNudge, kPi / 2.0);
    const double t3 = k % 2 == 1 ? bisect(k, kPi / 2.0, kPi - kNudge) : bisect(k, 1.5 * kPi, 2.0 * kPi - kNudge);
    roots = {{0.0, "theta0"}, {t1, "theta1"}, {kPi, "theta2"}, {t3, "theta3"}};
  }
  std::vector<CircleEquilibrium> out;
  for (auto& [theta, label] : roots) {
    CircleEquilibrium ce;
    ce.theta = theta;
    ce.label = label;
    const CircleJacobian cj = circle_jacobian(p, bc, ce);
    ce.radial_sign = cj.radial_sign;
    ce.angular_sign = cj.angular_sign;
    ce.kind = cj.kind;
    out.push_back(ce);
  }
  return out;
}

CircleJacobian circle_jacobian(const Params& p, BlowupCase bc, const CircleEquilibrium& ce) {
  const double t = ce.theta;
  if (std::abs(circle_residual(p, bc, t)) > 1e-10) {
    throw DomainError("theta = " + std::to_string(t) + " is not an equilibrium on the blow-up circle");
  }
  const double h = kFdStep;
  const Vec2 fr = (1.0 / (2.0 * h)) * (blowup_field(p, bc, {h, t}) - blowup_field(p, bc, {-h, t}));
  const Vec2 ft = (1.0 / (2.0 * h)) * (blowup_field(p, bc, {0.0, t + h}) - blowup_field(p, bc, {0.0, t - h}));
  CircleJacobian out;
  out.jac(0, 0) = fr.x;
  out.jac(0, 1) = ft.x;
  out.jac(1, 0) = fr.y;
  out.jac(1, 1) = ft.y;
  out.radial_sign = sign_of(fr.x);
  out.angular_sign = sign_of(ft.y);
  out.kind = out.radial_sign * out.angular_sign < 0 ? CircleKind::Saddle : CircleKind::NodeOrFocus;
  out.stable = out.radial_sign < 0 && out.angular_sign < 0;
  out.unstable = out.radial_sign > 0 && out.angular_sign > 0;
  return out;
}

std::vector<SectorSummary> sector_structure(const Params& p) {
  std::vector<SectorSummary> out;
  for (const auto& e : infinite_equilibria(p)) {
    out.push_back({e.label, e.at_infinity->chart, e.kind, e.sectors});
  }
  return out;
}

}  // namespace bh
