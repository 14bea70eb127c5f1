#include "bhphase/core.hpp"

#include <string>

#include "bhphase/errors.hpp"

namespace bh {

Params::Params(int n, int k, double c, int m) : n_(n), k_(k), c_(c), m_(m) {
  if (m != 1) throw ParameterError("m must be 1, got " + std::to_string(m));
  if (n != 1 && n != 2) throw ParameterError("n must be 1 or 2, got " + std::to_string(n));
  if (k < 1) throw ParameterError("k must be a positive integer, got " + std::to_string(k));
  if (!std::isfinite(c) || c <= 0.0) throw ParameterError("c must be a positive real, got " + std::to_string(c));
}

Vec2 eval_field(const Params& p, Vec2 xy) noexcept {
  const double x = xy.x;
  const double y = xy.y;
  return {y, -p.c() * y + ipow(x, p.k()) * y + x * (ipow(x, p.n()) - 1.0)};
}

Mat2 jacobian(const Params& p, Vec2 xy) noexcept {
  const double x = xy.x;
  const double y = xy.y;
  const int n = p.n();
  const int k = p.k();
  Mat2 j;
  j(0, 0) = 0.0;
  j(0, 1) = 1.0;
  j(1, 0) = (1.0 + n) * ipow(x, n) + k * ipow(x, k - 1) * y - 1.0;
  j(1, 1) = ipow(x, k) - p.c();
  return j;
}

double divergence(const Params& p, Vec2 xy) noexcept { return ipow(xy.x, p.k()) - p.c(); }

std::string_view to_string(RegionTag tag) noexcept { return tag == RegionTag::B1 ? "B1" : "B2"; }

RegionTag bendixson_region(const Params& p) noexcept { return p.k() % 2 == 1 ? RegionTag::B1 : RegionTag::B2; }

RegionTest in_bendixson_region(const Params& p, Vec2 xy) noexcept {
  return {ipow(xy.x, p.k()) < p.c(), bendixson_region(p)};
}

double bendixson_bound(const Params& p) noexcept { return std::pow(p.c(), 1.0 / p.k()); }

}  // namespace bh
