#include <doctest.h>

#include <cmath>

#include "bhphase/errors.hpp"
#include "bhphase/pde.hpp"

using namespace bh;

TEST_CASE("config validation") {
  PdeConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.time_step() <= 0.35 * cfg.dz() * cfg.dz() + 1e-18);
  CHECK(std::abs(cfg.T / cfg.time_step() - std::round(cfg.T / cfg.time_step())) < 1e-9);
  cfg.dt = 0.5 * cfg.dz() * cfg.dz();
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = {};
  cfg.N = 2;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("constant states 0 and 1 are steady") {
  const Params p(2, 3, 2.0);
  PdeConfig cfg;
  cfg.N = 101;
  cfg.L = 5;
  for (double v : {0.0, 1.0}) {
    PdeState st = make_state(cfg, std::vector<double>(101, v));
    for (int i = 0; i < 20; ++i) st = step(p, st, cfg);
    for (double w : st.w) CHECK(w == v);
  }
}

TEST_CASE("front location") {
  PdeConfig cfg;
  cfg.N = 201;
  cfg.L = 10;
  std::vector<double> w(201);
  for (int i = 0; i < 201; ++i) w[i] = 1.0 / (1.0 + std::exp(-cfg.L + cfg.dz() * i - 1.25));
  const PdeState st = make_state(cfg, w);
  CHECK(front_position(st) == doctest::Approx(1.25).epsilon(1e-3));
  CHECK_THROWS_AS(front_position(make_state(cfg, std::vector<double>(201, 0.2))), NumericalError);
  std::vector<double> two(201, 0.0);
  for (int i = 0; i < 60; ++i) two[i] = 1.0;
  for (int i = 100; i < 140; ++i) two[i] = 1.0;
  CHECK_THROWS_AS(front_position(make_state(cfg, two)), NumericalError);
}

TEST_CASE("traveling front moves at the wave speed") {
  const Params p(1, 1, 2.5);
  PdeConfig cfg;
  cfg.L = 40;
  cfg.N = 2048;
  cfg.T = 4;
  const SpeedReport rep = speed_estimate(p, shoot_heteroclinic(p), cfg);
  CHECK(rep.relative_error < 0.01);
  CHECK(rep.shape_drift < 1e-2);
  CHECK(rep.min_w >= 0.0);
  CHECK(rep.max_w <= 1.0);
  CHECK(rep.times.size() == rep.fronts.size());
}

TEST_CASE("speed estimate preconditions") {
  const Params p(1, 1, 1.5);
  CHECK_THROWS_AS(speed_estimate(p, shoot_heteroclinic(Params(1, 1, 2.0))), PreconditionError);
}

TEST_CASE("shape drift of an exact translate vanishes") {
  PdeConfig cfg;
  cfg.N = 401;
  cfg.L = 20;
  std::vector<double> a(401), b(401);
  for (int i = 0; i < 401; ++i) {
    const double z = -cfg.L + cfg.dz() * i;
    a[i] = 1.0 / (1.0 + std::exp(z));
    b[i] = 1.0 / (1.0 + std::exp(z - 2.0));
  }
  CHECK(shape_drift(make_state(cfg, a), make_state(cfg, b), 2.0) < 1e-3);
  CHECK(shape_drift(make_state(cfg, a), make_state(cfg, b), 0.0) > 0.1);
}
