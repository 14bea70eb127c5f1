#pragma once

#include <optional>
#include <vector>

#include "bhphase/core.hpp"
#include "bhphase/equilibria.hpp"

namespace bh {

/// Point of the closed Poincare disk; the unit circle is infinity.
struct DiskPoint {
  double X = 0.0;
  double Y = 0.0;
};

/// Right-hand side of the chart system for (n, k). The U-chart systems are the
/// pushforward of the planar field multiplied by v^(d-1), d = degree(); the
/// V-chart systems follow from U by (u, v) -> (u, -v) and the sign
/// (-1)^(d-1) on the u-component, (-1)^d on the v-component.
Vec2 chart_field(const Params& p, const ChartPoint& cp) noexcept;

/// Exponent of the positive rescaling factor v^e relating chart time to s.
int chart_time_exponent(const Params& p) noexcept;

/// Chart point -> (x, y). Throws DomainError for v <= 0.
PhasePoint chart_to_finite(const ChartPoint& cp);

/// (x, y) -> chart coordinates, or nullopt when the point is outside the chart's half-plane.
std::optional<ChartPoint> finite_to_chart(ChartId chart, const PhasePoint& pt) noexcept;

/// Chart whose coordinate axis dominates at pt (U1/V1 when |x| >= |y|).
ChartPoint dominant_chart(const PhasePoint& pt) noexcept;

/// Re-expresses cp in the chart selected by the dominant homogeneous coordinate.
/// Valid at v = 0 as well.
ChartPoint rechart(const ChartPoint& cp) noexcept;

/// Re-expresses cp in a specific chart; nullopt if the point is outside it.
std::optional<ChartPoint> to_chart(const ChartPoint& cp, ChartId target) noexcept;

/// Relative difference between chart_field and the rescaled pushforward of the
/// planar field, floored at unit scale: |F - v^(d-1) DPhi f| / max(|F|, |v^(d-1) DPhi f|, 1).
/// Throws DomainError for v <= 0.
double pushforward_residual(const Params& p, const ChartPoint& cp);

/// Infinite equilibria with their local classification.
std::vector<Equilibrium> infinite_equilibria(const Params& p);

/// X = x / (1 + |(x, y)|).
DiskPoint from_finite(const PhasePoint& pt) noexcept;
/// Same compactification written in chart coordinates; v = 0 lands on the unit circle.
DiskPoint to_disk(const ChartPoint& cp) noexcept;
/// Inverse of from_finite; throws DomainError on or outside the unit circle.
PhasePoint disk_to_finite(const DiskPoint& d);

}  // namespace bh
