#include <doctest.h>

#include <cmath>
#include <random>

#include "bhphase/core.hpp"
#include "bhphase/errors.hpp"

using namespace bh;

namespace {

Mat2 fd_jacobian(const Params& p, Vec2 at, double h = 1e-6) {
  Mat2 j;
  const Vec2 fx = (1.0 / (2 * h)) * (eval_field(p, Vec2{at.x + h, at.y}) - eval_field(p, Vec2{at.x - h, at.y}));
  const Vec2 fy = (1.0 / (2 * h)) * (eval_field(p, Vec2{at.x, at.y + h}) - eval_field(p, Vec2{at.x, at.y - h}));
  j(0, 0) = fx.x;
  j(1, 0) = fx.y;
  j(0, 1) = fy.x;
  j(1, 1) = fy.y;
  return j;
}

}  // namespace

TEST_CASE("ipow agrees with std::pow on integer exponents") {
  for (double x : {-2.5, -1.0, -0.3, 0.0, 0.7, 1.0, 3.0}) {
    for (int k = 0; k <= 7; ++k) CHECK(ipow(x, k) == doctest::Approx(std::pow(x, k)).epsilon(1e-15));
  }
  static_assert(ipow(2.0, 10) == 1024.0);
}

TEST_CASE("params validation") {
  CHECK_NOTHROW(Params(1, 1, 0.5));
  CHECK_NOTHROW(Params(2, 5, 3.0));
  CHECK_THROWS_AS(Params(3, 1, 1.0), ParameterError);
  CHECK_THROWS_AS(Params(0, 1, 1.0), ParameterError);
  CHECK_THROWS_AS(Params(1, 0, 1.0), ParameterError);
  CHECK_THROWS_AS(Params(1, 1, 0.0), ParameterError);
  CHECK_THROWS_AS(Params(1, 1, -1.0), ParameterError);
  CHECK_THROWS_AS(Params(1, 1, NAN), ParameterError);
  CHECK_THROWS_AS(Params(1, 1, 1.0, 2), ParameterError);
  CHECK(Params(1, 3, 1.0).degree() == 4);
  CHECK(Params(2, 1, 1.0).degree() == 3);
  CHECK(Params(1, 1, 1.0).degree() == 2);
}

TEST_CASE("field vanishes at the finite equilibria") {
  for (int n : {1, 2}) {
    for (int k : {1, 2, 3, 4}) {
      const Params p(n, k, 1.3);
      CHECK(norm(eval_field(p, Vec2{0, 0})) == 0.0);
      CHECK(norm(eval_field(p, Vec2{1, 0})) == 0.0);
      const double at_minus = norm(eval_field(p, Vec2{-1, 0}));
      if (n == 2) {
        CHECK(at_minus == 0.0);
      } else {
        CHECK(at_minus > 0.5);
      }
    }
  }
}

TEST_CASE("field matches the second-order traveling wave ODE") {
  // phi'' = -c phi' + phi^k phi' - phi (1 - phi^n)
  const Params p(2, 3, 2.5);
  const double x = 0.4, y = -0.2;
  const Vec2 f = eval_field(p, Vec2{x, y});
  CHECK(f.x == y);
  CHECK(f.y == doctest::Approx(-2.5 * y + std::pow(x, 3) * y - x * (1 - x * x)).epsilon(1e-15));
}

TEST_CASE("analytic jacobian matches central differences") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int n : {1, 2}) {
    for (int k : {1, 2, 3, 5}) {
      const Params p(n, k, 0.8);
      for (int i = 0; i < 50; ++i) {
        const Vec2 at{u(rng), u(rng)};
        const Mat2 a = jacobian(p, at);
        const Mat2 f = fd_jacobian(p, at);
        for (int r = 0; r < 2; ++r) {
          for (int c = 0; c < 2; ++c) CHECK(a(r, c) == doctest::Approx(f(r, c)).epsilon(1e-7).scale(1.0));
        }
        CHECK(divergence(p, at) == doctest::Approx(a.trace()).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("bendixson region") {
  SUBCASE("odd k is a half-plane") {
    const Params p(1, 3, 8.0);
    CHECK(bendixson_region(p) == RegionTag::B1);
    CHECK(bendixson_bound(p) == doctest::Approx(2.0));
    CHECK(in_bendixson_region(p, Vec2{-100.0, 3.0}).inside);
    CHECK(in_bendixson_region(p, Vec2{1.999, 0.0}).inside);
    CHECK_FALSE(in_bendixson_region(p, Vec2{2.0, 0.0}).inside);
  }
  SUBCASE("even k is a strip") {
    const Params p(2, 2, 4.0);
    CHECK(bendixson_region(p) == RegionTag::B2);
    CHECK(bendixson_bound(p) == doctest::Approx(2.0));
    CHECK(in_bendixson_region(p, Vec2{-1.5, 9.0}).inside);
    CHECK_FALSE(in_bendixson_region(p, Vec2{-2.5, 0.0}).inside);
    CHECK_FALSE(in_bendixson_region(p, Vec2{2.0, 0.0}).inside);
  }
  SUBCASE("divergence sign agrees with membership") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int k : {1, 2, 3, 4}) {
      const Params p(1, k, 1.7);
      for (int i = 0; i < 200; ++i) {
        const Vec2 at{u(rng), u(rng)};
        CHECK(in_bendixson_region(p, at).inside == (divergence(p, at) < 0.0));
      }
    }
  }
}
