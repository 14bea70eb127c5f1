#include <doctest.h>

#include <cmath>

#include "bhphase/dopri.hpp"
#include "bhphase/errors.hpp"
#include "bhphase/flow.hpp"

using namespace bh;

TEST_CASE("dopri stepper on a linear rotation") {
  // x' = y, y' = -x from (1, 0): exact solution (cos t, -sin t).
  const auto f = [](Vec2 v) { return Vec2{v.y, -v.x}; };
  DopriStepper<decltype(f)> st(f, {1.0, 0.0}, 1e-11, 1e-13, 0.1);
  while (st.t() < 10.0) REQUIRE(st.advance());
  const double t = st.t();
  CHECK(std::abs(st.y().x - std::cos(t)) < 1e-8);
  CHECK(std::abs(st.y().y + std::sin(t)) < 1e-8);

  SUBCASE("dense output interpolates inside the last step") {
    const double h = st.last_h();
    const Vec2 mid = st.partial(0.5);
    const double tm = t - 0.5 * h;
    CHECK(std::abs(mid.x - std::cos(tm)) < 1e-7);
    CHECK(std::abs(mid.y + std::sin(tm)) < 1e-7);
  }
}

TEST_CASE("controls validation") {
  IntegratorControls ctl;
  CHECK_NOTHROW(ctl.validate());
  ctl.rel_tol = 0.0;
  CHECK_THROWS_AS(ctl.validate(), ConfigError);
  ctl = {};
  ctl.chart_return_radius = 2 * ctl.chart_switch_radius;
  CHECK_THROWS_AS(ctl.validate(), ConfigError);
}

TEST_CASE("orbits near the stable equilibrium are captured") {
  const Params p(1, 1, 1.0);
  const Trajectory t = integrate(p, {0.2, 0.1, 0.0}, Direction::Forward);
  CHECK(t.termination.kind == TerminationKind::Captured);
  CHECK(t.termination.label == "E0");
  for (std::size_t i = 1; i < t.samples.size(); ++i) CHECK(t.samples[i].s > t.samples[i - 1].s);
}

TEST_CASE("backward integration runs s downward") {
  const Params p(1, 1, 2.5);
  IntegratorControls ctl;
  ctl.max_s = 5.0;
  const Trajectory t = integrate(p, {0.2, 0.1, 0.0}, Direction::Backward, ctl);
  REQUIRE(t.samples.size() > 2);
  for (std::size_t i = 1; i < t.samples.size(); ++i) CHECK(t.samples[i].s < t.samples[i - 1].s);
}

TEST_CASE("starting at an equilibrium is an immediate capture") {
  const Params p(2, 2, 1.0);
  const Trajectory t = integrate(p, {-1.0, 0.0, 0.0}, Direction::Forward);
  CHECK(t.termination.kind == TerminationKind::Captured);
  CHECK(t.termination.label == "E2");
  CHECK(t.samples.size() == 1);
}

TEST_CASE("invariant line y = 1 - x at n = k = c = 1") {
  // On y = 1 - x: y' = -c(1-x) + x(1-x) + x(x-1) = c(x - 1) = -x' when c = 1.
  const Params p(1, 1, 1.0);
  IntegratorControls ctl;
  ctl.max_s = 8.0;
  for (double x0 : {0.3, 0.7, 1.5}) {
    const Trajectory t = integrate(p, {x0, 1.0 - x0, 0.0}, Direction::Forward, ctl);
    double worst = 0.0;
    for (const auto& s : t.samples) worst = std::max(worst, std::abs(s.y - (1.0 - s.x)) / std::max(1.0, std::abs(s.x)));
    CHECK(worst < 1e-8);
  }
}

TEST_CASE("limit sets") {
  SUBCASE("finite") {
    const Params p(1, 1, 2.5);
    const Trajectory t = integrate(p, {0.5, -0.2, 0.0}, Direction::Forward);
    const LimitSet l = limit_set(p, t);
    CHECK(l.kind == LimitKind::Finite);
    CHECK(l.tag() == "E0");
  }
  SUBCASE("escape to infinity is continued to an infinite equilibrium") {
    const Params p(1, 1, 2.0);
    const Trajectory t = integrate(p, {3.0, 3.0, 0.0}, Direction::Forward);
    const LimitSet l = limit_set(p, t);
    CHECK(l.kind == LimitKind::Infinite);
    CHECK(l.label.front() == 'I');
    for (const auto& d : l.continuation) CHECK(std::hypot(d.X, d.Y) <= 1.0 + 1e-12);
  }
  SUBCASE("chart start") {
    const Params p(2, 1, 1.0);
    const LimitSet l = follow_from_chart(p, {ChartId::U1, 0.0, 0.3}, Direction::Forward);
    CHECK(l.kind != LimitKind::Inconclusive);
  }
}

TEST_CASE("cycle search finds nothing where the divergence is negative") {
  CycleBudget b;
  b.grid = 6;
  for (double c : {1.0, 2.0}) {
    const CycleSearchResult r = cycle_search(Params(1, 1, c), Window{}, b);
    CHECK_FALSE(r.found());
    CHECK(r.seeds == 36);
  }
}

TEST_CASE("a degenerate window exhausts immediately") {
  const CycleSearchResult r = cycle_search(Params(1, 1, 1.0), Window{0.0, 0.0, 0.0, 0.0});
  CHECK_FALSE(r.found());
  CHECK(r.seeds == 0);
}

TEST_CASE("a loose return tolerance turns focus spirals into witnesses") {
  CycleBudget b;
  b.grid = 4;
  b.return_tol = 0.5;
  const CycleSearchResult r = cycle_search(Params(1, 1, 0.2), Window{}, b);
  REQUIRE(r.found());
  CHECK(r.witness->return_distance < 0.5);
  CHECK(r.witness->x_section > 0.0);
  CHECK(r.witness->x_section < 1.0);
}
