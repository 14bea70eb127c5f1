#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bhphase/compact.hpp"
#include "bhphase/core.hpp"
#include "bhphase/equilibria.hpp"

namespace bh {

enum class Direction { Forward, Backward };

std::string_view to_string(Direction d) noexcept;

struct IntegratorControls {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_step = 0.1;
  double capture_radius = 1e-8;
  double escape_radius = 1e6;
  double max_s = 1e4;
  /// Radius, in chart coordinates, of the capture ball around each infinite
  /// equilibrium. Zero disables capture at infinity during finite integration.
  double infinity_capture_radius = 0.05;
  /// Finite radius at which limit_set hands a trajectory over to a chart.
  double chart_switch_radius = 1e3;
  /// Finite radius below which a chart trajectory returns to the plane.
  double chart_return_radius = 500.0;
  int max_handoffs = 8;
  long max_steps = 4'000'000;

  /// Throws ConfigError on non-positive or inconsistent values.
  void validate() const;
};

enum class TerminationKind { Captured, Escaped, MaxTime, StepFailure };

std::string_view to_string(TerminationKind k) noexcept;

struct ChartExit {
  ChartPoint point;
  /// Label of the infinite equilibrium whose capture ball was entered; empty
  /// when the trajectory left through the escape radius.
  std::string near;
};

struct Termination {
  TerminationKind kind = TerminationKind::MaxTime;
  /// Finite equilibrium label for Captured.
  std::string label;
  std::optional<ChartExit> exit;
};

/// Samples are accepted integrator steps; s decreases for backward runs.
struct Trajectory {
  Direction direction = Direction::Forward;
  std::vector<PhasePoint> samples;
  Termination termination;
};

Trajectory integrate(const Params& p, const PhasePoint& start, Direction dir, const IntegratorControls& ctl = {});

enum class LimitKind { Finite, Infinite, Inconclusive };

std::string_view to_string(LimitKind k) noexcept;

struct LimitSet {
  LimitKind kind = LimitKind::Inconclusive;
  std::string label;
  /// Disk-coordinate path of any continuation beyond the trajectory.
  std::vector<DiskPoint> continuation;

  /// Label, or "inconclusive".
  std::string tag() const { return kind == LimitKind::Inconclusive ? "inconclusive" : label; }
};

/// Limit set reached by t in its direction of integration; escaped
/// trajectories are continued in the charts until captured at infinity.
LimitSet limit_set(const Params& p, const Trajectory& t, const IntegratorControls& ctl = {});

/// Follows the orbit through a chart point (v > 0) to its limit set in direction dir.
LimitSet follow_from_chart(const Params& p, const ChartPoint& start, Direction dir, const IntegratorControls& ctl = {});

struct Window {
  double xmin = -2.0;
  double xmax = 2.0;
  double ymin = -2.0;
  double ymax = 2.0;
};

struct CycleBudget {
  int grid = 20;
  double max_s = 200.0;
  int max_crossings = 64;
  double return_tol = 1e-6;
  /// Crossings closer than this to E0 are treated as spiralling into the focus.
  double min_amplitude = 1e-3;
  /// Orbits leaving this radius are abandoned.
  double escape_radius = 20.0;
};

struct CycleWitness {
  PhasePoint seed;
  Direction direction = Direction::Forward;
  double x_section = 0.0;
  double return_distance = 0.0;
};

struct CycleSearchResult {
  std::optional<CycleWitness> witness;
  int seeds = 0;
  long crossings = 0;

  bool found() const noexcept { return witness.has_value(); }
};

/// Seeds a grid in the window, integrates both ways and tests successive
/// crossings of the section {y = 0, 0 < x < 1} for near-returns.
CycleSearchResult cycle_search(const Params& p, const Window& window, const CycleBudget& budget = {},
                               const IntegratorControls& ctl = {});

}  // namespace bh
