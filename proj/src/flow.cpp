#include "bhphase/flow.hpp"

#include <cmath>
#include <variant>

#include "bhphase/dopri.hpp"
#include "bhphase/errors.hpp"

namespace bh {
namespace {

double sign_of(Direction dir) { return dir == Direction::Forward ? 1.0 : -1.0; }

struct FiniteTarget {
  std::string label;
  Vec2 at;
};

std::vector<FiniteTarget> finite_targets(const Params& p) {
  std::vector<FiniteTarget> out;
  for (const auto& e : finite_equilibria(p)) out.push_back({e.label, e.finite->xy()});
  return out;
}

// Capture ball test at infinity for a chart point, against every infinite
// equilibrium whose chart contains the point.
std::optional<ChartExit> infinity_capture(const Params& p, const std::vector<Equilibrium>& inf, const ChartPoint& cp,
                                          double sgn, double radius) {
  for (const auto& e : inf) {
    const ChartPoint& at = *e.at_infinity;
    const auto local = to_chart(cp, at.chart);
    if (!local) continue;
    const double du = at.u - local->u;
    const double dv = -local->v;
    if (std::hypot(du, dv) >= radius) continue;
    const Vec2 g = chart_field(p, *local);
    if (sgn * (g.x * du + g.y * dv) > 0.0) return ChartExit{*local, e.label};
  }
  return std::nullopt;
}

std::optional<ChartExit> infinity_capture(const Params& p, const std::vector<Equilibrium>& inf, const PhasePoint& pt,
                                          double sgn, double radius) {
  if (radius <= 0.0) return std::nullopt;
  // Only points with some chart coordinate v < radius can be inside a ball.
  if (std::max(std::abs(pt.x), std::abs(pt.y)) * radius <= 1.0) return std::nullopt;
  return infinity_capture(p, inf, dominant_chart(pt), sgn, radius);
}

using State = std::variant<PhasePoint, ChartPoint>;

void append_disk(std::vector<DiskPoint>& out, const std::vector<PhasePoint>& pts, std::size_t from) {
  for (std::size_t i = from; i < pts.size(); ++i) out.push_back(from_finite(pts[i]));
}

enum class ChartOutcome { Captured, Returned, Inconclusive };

struct ChartRun {
  ChartOutcome outcome = ChartOutcome::Inconclusive;
  std::string label;
  PhasePoint returned;
};

ChartRun run_in_chart(const Params& p, ChartPoint cp, Direction dir, const IntegratorControls& ctl,
                      const std::vector<Equilibrium>& inf, std::vector<DiskPoint>& path) {
  const double sgn = sign_of(dir);
  double tau = 0.0;
  long steps = 0;
  while (true) {
    const ChartId chart = cp.chart;
    auto g = [&p, chart, sgn](Vec2 y) { return sgn * chart_field(p, ChartPoint{chart, y.x, y.y}); };
    DopriStepper<decltype(g)> st(g, {cp.u, cp.v}, ctl.rel_tol, ctl.abs_tol, ctl.max_step);
    bool switched = false;
    while (!switched) {
      if (tau >= ctl.max_s || ++steps > ctl.max_steps) return {};
      if (!st.advance()) return {};
      tau += st.last_h();
      cp = ChartPoint{chart, st.y().x, st.y().y};
      path.push_back(to_disk(cp));
      if (auto hit = infinity_capture(p, inf, cp, sgn, ctl.infinity_capture_radius)) {
        return {ChartOutcome::Captured, hit->near, {}};
      }
      if (cp.v > 0.0 && std::hypot(1.0, cp.u) < ctl.chart_return_radius * cp.v) {
        return {ChartOutcome::Returned, {}, chart_to_finite(cp)};
      }
      if (std::abs(cp.u) > 2.0) {
        cp = rechart(cp);
        switched = true;
      }
    }
  }
}

LimitSet continue_orbit(const Params& p, State state, Direction dir, const IntegratorControls& ctl) {
  const auto inf = infinite_equilibria(p);
  IntegratorControls leg = ctl;
  leg.escape_radius = std::min(ctl.escape_radius, ctl.chart_switch_radius);
  LimitSet out;
  for (int hand = 0; hand <= ctl.max_handoffs; ++hand) {
    if (auto* pt = std::get_if<PhasePoint>(&state)) {
      const Trajectory t = integrate(p, *pt, dir, leg);
      append_disk(out.continuation, t.samples, 1);
      switch (t.termination.kind) {
        case TerminationKind::Captured:
          out.kind = LimitKind::Finite;
          out.label = t.termination.label;
          return out;
        case TerminationKind::Escaped:
          if (!t.termination.exit->near.empty()) {
            out.kind = LimitKind::Infinite;
            out.label = t.termination.exit->near;
            return out;
          }
          state = t.termination.exit->point;
          break;
        default:
          return out;
      }
    } else {
      const ChartRun run = run_in_chart(p, std::get<ChartPoint>(state), dir, ctl, inf, out.continuation);
      if (run.outcome == ChartOutcome::Captured) {
        out.kind = LimitKind::Infinite;
        out.label = run.label;
        return out;
      }
      if (run.outcome == ChartOutcome::Inconclusive) return out;
      state = run.returned;
    }
  }
  return out;
}

bool on_section(Vec2 a) { return a.x > 0.0 && a.x < 1.0; }

}  // namespace

std::string_view to_string(Direction d) noexcept { return d == Direction::Forward ? "forward" : "backward"; }

std::string_view to_string(TerminationKind k) noexcept {
  switch (k) {
    case TerminationKind::Captured: return "captured";
    case TerminationKind::Escaped: return "escaped";
    case TerminationKind::MaxTime: return "max-time";
    case TerminationKind::StepFailure: return "step-failure";
  }
  return "?";
}

std::string_view to_string(LimitKind k) noexcept {
  switch (k) {
    case LimitKind::Finite: return "finite";
    case LimitKind::Infinite: return "infinite";
    case LimitKind::Inconclusive: return "inconclusive";
  }
  return "?";
}

void IntegratorControls::validate() const {
  const auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(std::string(name) + " must be positive and finite");
  };
  positive(rel_tol, "rel_tol");
  positive(abs_tol, "abs_tol");
  positive(max_step, "max_step");
  positive(capture_radius, "capture_radius");
  positive(escape_radius, "escape_radius");
  positive(max_s, "max_s");
  positive(chart_switch_radius, "chart_switch_radius");
  positive(chart_return_radius, "chart_return_radius");
  if (!(infinity_capture_radius >= 0.0)) throw ConfigError("infinity_capture_radius must be non-negative");
  if (chart_return_radius >= chart_switch_radius) {
    throw ConfigError("chart_return_radius must be below chart_switch_radius");
  }
  if (max_handoffs < 0 || max_steps <= 0) throw ConfigError("max_handoffs and max_steps must be positive");
}

Trajectory integrate(const Params& p, const PhasePoint& start, Direction dir, const IntegratorControls& ctl) {
  ctl.validate();
  if (!std::isfinite(start.x) || !std::isfinite(start.y)) throw DomainError("start point must be finite");
  const double sgn = sign_of(dir);
  const auto targets = finite_targets(p);
  const auto inf = infinite_equilibria(p);

  Trajectory t;
  t.direction = dir;
  t.samples.push_back(start);

  for (const auto& e : targets) {
    if (start.x == e.at.x && start.y == e.at.y) {
      t.termination = {TerminationKind::Captured, e.label, std::nullopt};
      return t;
    }
  }

  auto f = [&p, sgn](Vec2 y) { return sgn * eval_field(p, y); };
  DopriStepper<decltype(f)> st(f, start.xy(), ctl.rel_tol, ctl.abs_tol, ctl.max_step);
  long steps = 0;
  while (true) {
    if (std::abs(st.t()) >= ctl.max_s || ++steps > ctl.max_steps) {
      t.termination.kind = TerminationKind::MaxTime;
      return t;
    }
    if (!st.advance()) {
      t.termination.kind = TerminationKind::StepFailure;
      return t;
    }
    const Vec2 y = st.y();
    const PhasePoint pt{y.x, y.y, start.s + sgn * st.t()};
    t.samples.push_back(pt);

    for (const auto& e : targets) {
      const Vec2 d = e.at - y;
      if (norm(d) < ctl.capture_radius && dot(st.dy(), d) > 0.0) {
        t.termination = {TerminationKind::Captured, e.label, std::nullopt};
        return t;
      }
    }
    if (auto hit = infinity_capture(p, inf, pt, sgn, ctl.infinity_capture_radius)) {
      t.termination = {TerminationKind::Escaped, {}, std::move(hit)};
      return t;
    }
    if (std::hypot(y.x, y.y) > ctl.escape_radius) {
      t.termination = {TerminationKind::Escaped, {}, ChartExit{dominant_chart(pt), {}}};
      return t;
    }
  }
}

LimitSet limit_set(const Params& p, const Trajectory& t, const IntegratorControls& ctl) {
  LimitSet out;
  switch (t.termination.kind) {
    case TerminationKind::Captured:
      out.kind = LimitKind::Finite;
      out.label = t.termination.label;
      return out;
    case TerminationKind::Escaped: {
      const ChartExit& exit = *t.termination.exit;
      if (!exit.near.empty()) {
        out.kind = LimitKind::Infinite;
        out.label = exit.near;
        return out;
      }
      return continue_orbit(p, exit.point, t.direction, ctl);
    }
    default:
      return out;
  }
}

LimitSet follow_from_chart(const Params& p, const ChartPoint& start, Direction dir, const IntegratorControls& ctl) {
  ctl.validate();
  if (!(start.v > 0.0)) throw DomainError("follow_from_chart needs v > 0");
  return continue_orbit(p, start, dir, ctl);
}

CycleSearchResult cycle_search(const Params& p, const Window& window, const CycleBudget& budget,
                               const IntegratorControls& ctl) {
  CycleSearchResult out;
  const double wx = window.xmax - window.xmin;
  const double wy = window.ymax - window.ymin;
  if (!(wx > 0.0) || !(wy > 0.0) || budget.grid <= 0) return out;

  IntegratorControls run = ctl;
  run.max_s = budget.max_s;
  run.infinity_capture_radius = 0.0;
  run.escape_radius = std::min(ctl.escape_radius, budget.escape_radius);

  for (int i = 0; i < budget.grid; ++i) {
    for (int j = 0; j < budget.grid; ++j) {
      const PhasePoint seed{window.xmin + (i + 0.5) * wx / budget.grid, window.ymin + (j + 0.5) * wy / budget.grid,
                            0.0};
      ++out.seeds;
      for (Direction dir : {Direction::Forward, Direction::Backward}) {
        const double sgn = sign_of(dir);
        const Trajectory t = integrate(p, seed, dir, run);
        auto f = [&p, sgn](Vec2 y) { return sgn * eval_field(p, y); };
        std::vector<double> hits;
        for (std::size_t m = 1; m < t.samples.size() && static_cast<int>(hits.size()) < budget.max_crossings; ++m) {
          const Vec2 a = t.samples[m - 1].xy();
          const Vec2 b = t.samples[m].xy();
          // Forward flow crosses the section downward, backward flow upward.
          const bool crosses = sgn > 0.0 ? (a.y > 0.0 && b.y <= 0.0) : (a.y < 0.0 && b.y >= 0.0);
          if (!crosses) continue;
          const double h = std::abs(t.samples[m].s - t.samples[m - 1].s);
          double lo = 0.0;
          double hi = 1.0;
          Vec2 at = b;
          for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            at = dopri_trial(f, a, f(a), mid * h, ctl.rel_tol, ctl.abs_tol).y;
            if ((at.y > 0.0) == (a.y > 0.0)) lo = mid;
            else hi = mid;
          }
          if (!on_section(at)) continue;
          hits.push_back(at.x);
          ++out.crossings;
          const std::size_t n = hits.size();
          if (n >= 2 && hits[n - 2] > budget.min_amplitude &&
              std::abs(hits[n - 1] - hits[n - 2]) < budget.return_tol) {
            out.witness = CycleWitness{seed, dir, hits[n - 1], std::abs(hits[n - 1] - hits[n - 2])};
            return out;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace bh
