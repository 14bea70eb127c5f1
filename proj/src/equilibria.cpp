#include "bhphase/equilibria.hpp"

#include <cmath>

#include "bhphase/errors.hpp"

namespace bh {

std::string_view to_string(ChartId id) noexcept {
  switch (id) {
    case ChartId::U1: return "U1";
    case ChartId::V1: return "V1";
    case ChartId::U2: return "U2";
    case ChartId::V2: return "V2";
  }
  return "?";
}

ChartId chart_from_string(std::string_view s) {
  if (s == "U1") return ChartId::U1;
  if (s == "V1") return ChartId::V1;
  if (s == "U2") return ChartId::U2;
  if (s == "V2") return ChartId::V2;
  throw ParameterError("unknown chart '" + std::string(s) + "'");
}

std::string_view to_string(EquilibriumKind kind) noexcept {
  switch (kind) {
    case EquilibriumKind::StableFocus: return "stable-focus";
    case EquilibriumKind::StableNode: return "stable-node";
    case EquilibriumKind::UnstableNode: return "unstable-node";
    case EquilibriumKind::Saddle: return "saddle";
    case EquilibriumKind::SaddleNode: return "saddle-node";
    case EquilibriumKind::Sectors: return "degenerate-with-sectors";
  }
  return "?";
}

std::string_view to_string(Sector s) noexcept {
  switch (s) {
    case Sector::Elliptic: return "elliptic";
    case Sector::Hyperbolic: return "hyperbolic";
    case Sector::Parabolic: return "parabolic";
  }
  return "?";
}

std::string Equilibrium::chart_name() const {
  if (finite) return "finite";
  return std::string(to_string(at_infinity->chart));
}

namespace {

Equilibrium make_finite(const Params& p, const char* label, double x) {
  Equilibrium e;
  e.label = label;
  e.finite = PhasePoint{x, 0.0, 0.0};
  e.kind = classify(p, e);
  return e;
}

int finite_index(const Params& p, const Equilibrium& e) {
  if (!e.finite) throw DomainError("'" + e.label + "' is not a finite equilibrium");
  const double x = e.finite->x;
  const double y = e.finite->y;
  int idx = -1;
  if (e.label == "E0") idx = 0;
  else if (e.label == "E1") idx = 1;
  else if (e.label == "E2" && p.n() == 2) idx = 2;
  const double expected = idx == 0 ? 0.0 : (idx == 1 ? 1.0 : -1.0);
  if (idx < 0 || x != expected || y != 0.0) {
    throw DomainError("'" + e.label + "' at (" + std::to_string(x) + ", " + std::to_string(y) +
                      ") is not a finite equilibrium of the field");
  }
  return idx;
}

// Eigen-pair of a saddle [[0,1],[n,t]] from the closed form.
EigenData saddle_data(int n, double t) {
  const double root = std::sqrt(t * t + 4.0 * n);
  EigenData d;
  d.values = {std::complex<double>((t - root) / 2.0, 0.0), std::complex<double>((t + root) / 2.0, 0.0)};
  d.vectors = std::array<Vec2, 2>{Vec2{(-t - root) / (2.0 * n), 1.0}, Vec2{(-t + root) / (2.0 * n), 1.0}};
  return d;
}

}  // namespace

std::vector<Equilibrium> finite_equilibria(const Params& p) {
  std::vector<Equilibrium> out;
  out.push_back(make_finite(p, "E0", 0.0));
  out.push_back(make_finite(p, "E1", 1.0));
  if (p.n() % 2 == 0) out.push_back(make_finite(p, "E2", -1.0));
  return out;
}

Equilibrium finite_equilibrium(const Params& p, std::string_view label) {
  for (auto& e : finite_equilibria(p)) {
    if (e.label == label) return e;
  }
  throw DomainError("no finite equilibrium labelled '" + std::string(label) + "'");
}

EigenData eigen_data(const Params& p, const Equilibrium& e) {
  const int idx = finite_index(p, e);
  const double c = p.c();
  if (idx == 1) return saddle_data(p.n(), 1.0 - c);
  if (idx == 2) return saddle_data(p.n(), (p.k() % 2 == 0 ? 1.0 : -1.0) - c);

  EigenData d;
  if (c >= 2.0 || std::abs(c - 2.0) < kNodeBand) {
    const double disc = c * c - 4.0;
    const double root = disc > 0.0 ? std::sqrt(disc) : 0.0;
    d.values = {std::complex<double>((-c - root) / 2.0, 0.0), std::complex<double>((-c + root) / 2.0, 0.0)};
    d.vectors = std::array<Vec2, 2>{Vec2{(-c + root) / 2.0, 1.0}, Vec2{(-c - root) / 2.0, 1.0}};
  } else {
    const double im = std::sqrt(4.0 - c * c) / 2.0;
    d.values = {std::complex<double>(-c / 2.0, -im), std::complex<double>(-c / 2.0, im)};
  }
  return d;
}

EquilibriumKind classify(const Params& p, const Equilibrium& e) {
  const int idx = finite_index(p, e);
  if (idx != 0) return EquilibriumKind::Saddle;
  const double c = p.c();
  if (c >= 2.0 || std::abs(c - 2.0) < kNodeBand) return EquilibriumKind::StableNode;
  return EquilibriumKind::StableFocus;
}

}  // namespace bh
