#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bhphase/compact.hpp"
#include "bhphase/core.hpp"
#include "bhphase/equilibria.hpp"

namespace bh {

/// Quasi-homogeneous blow-ups of the U2 origin:
///   Buc1: n = 1, k > 1, (u, v) = (r^k cos t, r^(k+1) sin t)
///   Buc2: n = 2, k = 1, (u, v) = (r cos t, r^2 sin t)
///   Buc3: n = 2, k > 1, (u, v) = (r^k cos t, r^(k+1) sin t)
enum class BlowupCase { Buc1, Buc2, Buc3 };

std::string_view to_string(BlowupCase bc) noexcept;

/// Case selected by (n, k); throws ParameterError for n = 1, k = 1 (no blow-up needed).
BlowupCase blowup_case(const Params& p);

struct BlowupPoint {
  double r = 0.0;
  double theta = 0.0;
};

/// Weights (a, b) of the blow-up map.
std::pair<int, int> blowup_weights(const Params& p, BlowupCase bc);

/// (r, theta) -> U2 chart point.
ChartPoint blowup_to_chart(const Params& p, BlowupCase bc, const BlowupPoint& bp);

/// Published blown-up system after removal of the positive common factor.
/// Throws ParameterError when bc does not match (n, k).
Vec2 blowup_field(const Params& p, BlowupCase bc, const BlowupPoint& bp);

enum class CircleKind { Saddle, NodeOrFocus };

std::string_view to_string(CircleKind kind) noexcept;

struct CircleEquilibrium {
  double theta = 0.0;
  /// "theta0".."theta3" (Buc1/Buc3) or "theta0^1".."theta5^1" (Buc2).
  std::string label;
  int radial_sign = 0;
  int angular_sign = 0;
  CircleKind kind = CircleKind::Saddle;
};

/// Residual of the circle equation d(theta)/dt at r = 0.
double circle_residual(const Params& p, BlowupCase bc, double theta);

/// Roots of the circle equation in [0, 2pi), in increasing label order.
std::vector<CircleEquilibrium> circle_equilibria(const Params& p, BlowupCase bc);

struct CircleJacobian {
  Mat2 jac;
  CircleKind kind = CircleKind::Saddle;
  int radial_sign = 0;
  int angular_sign = 0;
  /// True when both eigenvalues are negative.
  bool stable = false;
  /// True when both eigenvalues are positive.
  bool unstable = false;
};

/// Central finite-difference Jacobian of blowup_field at (0, theta).
/// Throws DomainError if theta is not on the circle's equilibrium set.
CircleJacobian circle_jacobian(const Params& p, BlowupCase bc, const CircleEquilibrium& ce);

struct SectorSummary {
  std::string label;
  ChartId chart = ChartId::U1;
  EquilibriumKind kind = EquilibriumKind::Sectors;
  std::vector<Sector> sectors;
};

/// Sector inventory of every infinite equilibrium of p.
std::vector<SectorSummary> sector_structure(const Params& p);

}  // namespace bh
