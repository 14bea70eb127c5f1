#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bhphase/core.hpp"

namespace bh {

/// Poincare local charts. U1/V1 cover x > 0 / x < 0, U2/V2 cover y > 0 / y < 0.
enum class ChartId { U1, V1, U2, V2 };

std::string_view to_string(ChartId id) noexcept;
ChartId chart_from_string(std::string_view s);

/// Point of a chart; v >= 0 covers the chart's half-plane and v = 0 is infinity.
struct ChartPoint {
  ChartId chart = ChartId::U1;
  double u = 0.0;
  double v = 0.0;
};

enum class EquilibriumKind { StableFocus, StableNode, UnstableNode, Saddle, SaddleNode, Sectors };

std::string_view to_string(EquilibriumKind kind) noexcept;

enum class Sector { Elliptic, Hyperbolic, Parabolic };

std::string_view to_string(Sector s) noexcept;

/// A finite or infinite equilibrium. `finite` is set for E0/E1/E2, `at_infinity` for I1..I10.
struct Equilibrium {
  std::string label;
  std::optional<PhasePoint> finite;
  std::optional<ChartPoint> at_infinity;
  EquilibriumKind kind = EquilibriumKind::Saddle;
  std::vector<Sector> sectors;

  bool is_finite() const noexcept { return finite.has_value(); }
  /// "finite" or the chart name.
  std::string chart_name() const;
};

struct EigenData {
  std::array<std::complex<double>, 2> values{};
  /// Present only when both eigenvalues are real.
  std::optional<std::array<Vec2, 2>> vectors;

  bool real() const noexcept { return vectors.has_value(); }
};

/// |c - 2| below this is treated as the repeated-eigenvalue node.
inline constexpr double kNodeBand = 1e-12;

/// {E0, E1} for n = 1 and {E0, E1, E2} for n = 2.
std::vector<Equilibrium> finite_equilibria(const Params& p);

/// Closed-form eigenvalues and eigenvectors. At E0: lambda_{1,2} = (-c -/+ sqrt(c^2-4))/2
/// with V_{1,2} = ((-c +/- sqrt(c^2-4))/2, 1); at E1: mu_{1,2} = (1-c -/+ sqrt((c-1)^2+4n))/2
/// with W_{1,2} = ((c-1 -/+ sqrt(.))/(2n), 1); E2 uses t = (-1)^k - c in place of 1 - c.
/// Throws DomainError for anything that is not a finite equilibrium of p.
EigenData eigen_data(const Params& p, const Equilibrium& e);

EquilibriumKind classify(const Params& p, const Equilibrium& e);

/// Looks up E0, E1 or E2 by label; throws DomainError otherwise.
Equilibrium finite_equilibrium(const Params& p, std::string_view label);

}  // namespace bh
