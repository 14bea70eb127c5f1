#include "bhphase/compact.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "bhphase/errors.hpp"

namespace bh {
namespace {

// Published U1 system.
Vec2 u1_field(const Params& p, double u, double v) noexcept {
  const int k = p.k();
  const double c = p.c();
  if (p.n() == 2 && k == 1) {
    return {1.0 + v * (u - (1.0 + u * (c + u)) * v), -u * v * v * v};
  }
  const double vk = ipow(v, k);
  const double lead = p.n() == 1 ? ipow(v, k - 1) : ipow(v, k - 2);
  return {u + lead - vk - c * u * vk - u * u * vk, -u * ipow(v, k + 1)};
}

// Published U2 system.
Vec2 u2_field(const Params& p, double u, double v) noexcept {
  const int k = p.k();
  const double c = p.c();
  if (p.n() == 2 && k == 1) {
    return {-ipow(u, 4) + u * u * (v - 1.0) * v + v * v * (1.0 + c * u),
            v * (-ipow(u, 3) + u * (v - 1.0) * v + c * v * v)};
  }
  const double vk = ipow(v, k);
  const double vk1 = vk * v;
  if (p.n() == 1) {
    return {-ipow(u, 3) * ipow(v, k - 1) + vk + c * u * vk + u * u * vk - ipow(u, k + 1),
            -u * u * vk + c * vk1 + u * vk1 - ipow(u, k) * v};
  }
  return {-ipow(u, 4) * ipow(v, k - 2) + vk + c * u * vk + u * u * vk - ipow(u, k + 1),
          -ipow(u, 3) * ipow(v, k - 1) + c * vk1 + u * vk1 - ipow(u, k) * v};
}

// Homogeneous coordinates (X, Y, Z) of a chart point, Z >= 0.
std::array<double, 3> homogeneous(const ChartPoint& cp) noexcept {
  switch (cp.chart) {
    case ChartId::U1: return {1.0, cp.u, cp.v};
    case ChartId::V1: return {-1.0, -cp.u, cp.v};
    case ChartId::U2: return {cp.u, 1.0, cp.v};
    case ChartId::V2: return {-cp.u, -1.0, cp.v};
  }
  return {1.0, 0.0, 0.0};
}

std::optional<ChartPoint> from_homogeneous(const std::array<double, 3>& h, ChartId target) noexcept {
  const auto [X, Y, Z] = h;
  switch (target) {
    case ChartId::U1:
      if (X > 0.0) return ChartPoint{target, Y / X, Z / X};
      break;
    case ChartId::V1:
      if (X < 0.0) return ChartPoint{target, Y / X, -Z / X};
      break;
    case ChartId::U2:
      if (Y > 0.0) return ChartPoint{target, X / Y, Z / Y};
      break;
    case ChartId::V2:
      if (Y < 0.0) return ChartPoint{target, X / Y, -Z / Y};
      break;
  }
  return std::nullopt;
}

ChartId dominant(double X, double Y) noexcept {
  if (std::abs(X) >= std::abs(Y)) return X >= 0.0 ? ChartId::U1 : ChartId::V1;
  return Y > 0.0 ? ChartId::U2 : ChartId::V2;
}

// Exact pushforward of the planar field into chart coordinates.
Vec2 pushforward(const Params& p, const ChartPoint& cp) {
  const PhasePoint pt = chart_to_finite(cp);
  const Vec2 f = eval_field(p, pt);
  const double x = pt.x;
  const double y = pt.y;
  switch (cp.chart) {
    case ChartId::U1: return {(f.y * x - y * f.x) / (x * x), -f.x / (x * x)};
    case ChartId::V1: return {(f.y * x - y * f.x) / (x * x), f.x / (x * x)};
    case ChartId::U2: return {(f.x * y - x * f.y) / (y * y), -f.y / (y * y)};
    case ChartId::V2: return {(f.x * y - x * f.y) / (y * y), f.y / (y * y)};
  }
  return {};
}

Equilibrium at_infinity(std::string label, ChartId chart, double u, EquilibriumKind kind,
                        std::vector<Sector> sectors) {
  Equilibrium e;
  e.label = std::move(label);
  e.at_infinity = ChartPoint{chart, u, 0.0};
  e.kind = kind;
  e.sectors = std::move(sectors);
  return e;
}

}  // namespace

int chart_time_exponent(const Params& p) noexcept { return p.degree() - 1; }

Vec2 chart_field(const Params& p, const ChartPoint& cp) noexcept {
  const bool first = cp.chart == ChartId::U1 || cp.chart == ChartId::V1;
  const bool u_chart = cp.chart == ChartId::U1 || cp.chart == ChartId::U2;
  if (u_chart) return first ? u1_field(p, cp.u, cp.v) : u2_field(p, cp.u, cp.v);
  const Vec2 base = first ? u1_field(p, cp.u, -cp.v) : u2_field(p, cp.u, -cp.v);
  const double su = chart_time_exponent(p) % 2 == 0 ? 1.0 : -1.0;
  return {su * base.x, -su * base.y};
}

PhasePoint chart_to_finite(const ChartPoint& cp) {
  if (!(cp.v > 0.0)) throw DomainError("chart point with v <= 0 has no finite image");
  const auto h = homogeneous(cp);
  return {h[0] / h[2], h[1] / h[2], 0.0};
}

std::optional<ChartPoint> finite_to_chart(ChartId chart, const PhasePoint& pt) noexcept {
  return from_homogeneous({pt.x, pt.y, 1.0}, chart);
}

ChartPoint dominant_chart(const PhasePoint& pt) noexcept {
  return *from_homogeneous({pt.x, pt.y, 1.0}, dominant(pt.x, pt.y));
}

ChartPoint rechart(const ChartPoint& cp) noexcept {
  const auto h = homogeneous(cp);
  return *from_homogeneous(h, dominant(h[0], h[1]));
}

std::optional<ChartPoint> to_chart(const ChartPoint& cp, ChartId target) noexcept {
  return from_homogeneous(homogeneous(cp), target);
}

double pushforward_residual(const Params& p, const ChartPoint& cp) {
  if (!(cp.v > 0.0)) throw DomainError("pushforward_residual needs v > 0");
  const Vec2 published = chart_field(p, cp);
  const Vec2 push = ipow(cp.v, chart_time_exponent(p)) * pushforward(p, cp);
  const double scale = std::max({norm(published), norm(push), 1.0});
  return norm(published - push) / scale;
}

std::vector<Equilibrium> infinite_equilibria(const Params& p) {
  const int k = p.k();
  const bool odd = k % 2 == 1;
  const std::string parity = odd ? "^0" : "^e";
  const auto degenerate = [odd] {
    return odd ? std::vector<Sector>{Sector::Elliptic, Sector::Hyperbolic} : std::vector<Sector>{Sector::Parabolic};
  };
  std::vector<Equilibrium> out;
  if (p.n() == 1) {
    const double u = k == 1 ? -1.0 : 0.0;
    const std::vector<Sector> sn{Sector::Hyperbolic, Sector::Hyperbolic, Sector::Parabolic};
    out.push_back(at_infinity("I1", ChartId::U1, u, EquilibriumKind::SaddleNode, sn));
    out.push_back(at_infinity("I2", ChartId::V1, u, EquilibriumKind::SaddleNode, sn));
    out.push_back(at_infinity("I3" + parity, ChartId::U2, 0.0, EquilibriumKind::Sectors, degenerate()));
    out.push_back(at_infinity("I4" + parity, ChartId::V2, 0.0, EquilibriumKind::Sectors, degenerate()));
    return out;
  }
  if (k == 1) {
    const std::vector<Sector> ep{Sector::Elliptic, Sector::Parabolic, Sector::Elliptic, Sector::Parabolic};
    out.push_back(at_infinity("I7", ChartId::U2, 0.0, EquilibriumKind::Sectors, ep));
    out.push_back(at_infinity("I8", ChartId::V2, 0.0, EquilibriumKind::Sectors, ep));
    return out;
  }
  const double u = k == 2 ? -1.0 : 0.0;
  out.push_back(at_infinity("I5", ChartId::U1, u, EquilibriumKind::UnstableNode, {}));
  out.push_back(at_infinity("I6", ChartId::V1, u, odd ? EquilibriumKind::StableNode : EquilibriumKind::UnstableNode, {}));
  out.push_back(at_infinity("I9" + parity, ChartId::U2, 0.0, EquilibriumKind::Sectors, degenerate()));
  out.push_back(at_infinity("I10" + parity, ChartId::V2, 0.0, EquilibriumKind::Sectors, degenerate()));
  return out;
}

DiskPoint from_finite(const PhasePoint& pt) noexcept {
  const double rho = std::hypot(pt.x, pt.y);
  return {pt.x / (1.0 + rho), pt.y / (1.0 + rho)};
}

DiskPoint to_disk(const ChartPoint& cp) noexcept {
  const auto [X, Y, Z] = homogeneous(cp);
  const double den = Z + std::hypot(X, Y);
  return {X / den, Y / den};
}

PhasePoint disk_to_finite(const DiskPoint& d) {
  const double rho = std::hypot(d.X, d.Y);
  if (!(rho < 1.0)) throw DomainError("disk point on or outside the unit circle has no finite image");
  return {d.X / (1.0 - rho), d.Y / (1.0 - rho), 0.0};
}

}  // namespace bh
