#include "bhphase/wave.hpp"

#include <algorithm>
#include <boost/math/interpolators/cubic_hermite.hpp>
#include <cmath>

#include "bhphase/equilibria.hpp"
#include "bhphase/errors.hpp"
#include "bhphase/flow.hpp"
#include "bhphase/portrait.hpp"
#include "bhphase/spline.hpp"

namespace bh {
namespace {

using Hermite = boost::math::interpolators::cubic_hermite<std::vector<double>>;

Hermite hermite_phi(const WaveProfile& wp) {
  return Hermite(std::vector<double>(wp.xi), std::vector<double>(wp.phi), std::vector<double>(wp.dphi));
}

void check_profile(const WaveProfile& wp) {
  if (wp.xi.size() < 2 || wp.phi.size() != wp.xi.size() || wp.dphi.size() != wp.xi.size()) {
    throw DomainError("wave profile needs at least two samples with matching arrays");
  }
}

// Local exponential rates of the tails: 1 - phi ~ e^{q xi} on the left, phi ~ e^{r xi} on the right.
double left_rate(const WaveProfile& wp) {
  const double gap = 1.0 - wp.phi.front();
  return gap > 0.0 ? -wp.dphi.front() / gap : 0.0;
}

double right_rate(const WaveProfile& wp) {
  const double last = wp.phi.back();
  return last != 0.0 ? wp.dphi.back() / last : 0.0;
}

AsymptoticCheck check(std::string name, bool pass, double value, double tol) {
  return {std::move(name), pass, true, value, tol};
}

}  // namespace

void WaveOptions::validate() const {
  for (double v : {seed_eps, rel_tol, abs_tol, max_step, capture_radius, max_s}) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError("wave options must be positive and finite");
  }
}

double slow_eigen_slope(double c) {
  const double disc = c * c - 4.0;
  return (-c + std::sqrt(std::max(disc, 0.0))) / 2.0;
}

WaveProfile shoot_heteroclinic(const Params& p, const WaveOptions& opt) {
  opt.validate();
  if (p.c() < 2.0 && std::abs(p.c() - 2.0) >= kNodeBand) {
    throw PreconditionError("a monotone wave with 0 < phi < 1 requires c >= 2 (got c = " + std::to_string(p.c()) +
                            ")");
  }
  const Equilibrium e1 = finite_equilibrium(p, "E1");
  const PhasePoint seed = seed_manifold(p, e1, Branch{Stability::Unstable, -1}, opt.seed_eps);

  IntegratorControls ctl;
  ctl.rel_tol = opt.rel_tol;
  ctl.abs_tol = opt.abs_tol;
  ctl.max_step = opt.max_step;
  ctl.capture_radius = opt.capture_radius;
  ctl.max_s = opt.max_s;
  ctl.infinity_capture_radius = 0.0;
  ctl.escape_radius = 1e3;
  const Trajectory t = integrate(p, seed, Direction::Forward, ctl);
  if (t.termination.kind != TerminationKind::Captured || t.termination.label != "E0") {
    throw NumericalError("unstable branch of E1 was not captured by E0 (termination: " +
                         std::string(to_string(t.termination.kind)) + ")");
  }

  WaveProfile wp;
  wp.params = p;
  wp.speed = p.c();
  for (const auto& s : t.samples) {
    wp.xi.push_back(s.s);
    wp.phi.push_back(s.x);
    wp.dphi.push_back(s.y);
  }

  // Phase normalization phi(0) = 1/2.
  const auto it = std::find_if(wp.phi.begin(), wp.phi.end(), [](double v) { return v <= 0.5; });
  if (it == wp.phi.begin() || it == wp.phi.end()) throw NumericalError("wave does not cross phi = 1/2");
  const std::size_t j = static_cast<std::size_t>(it - wp.phi.begin());
  const Hermite h = hermite_phi(wp);
  double lo = wp.xi[j - 1];
  double hi = wp.xi[j];
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (h(mid) > 0.5) lo = mid;
    else hi = mid;
  }
  const double shift = 0.5 * (lo + hi);
  for (double& x : wp.xi) x -= shift;
  return wp;
}

double wave_residual(const WaveProfile& wp) {
  check_profile(wp);
  const CubicSpline sp(wp.xi, wp.phi, wp.dphi.front(), wp.dphi.back());
  const auto& m = sp.moments();
  const auto d1 = sp.knot_slopes();
  const int n = wp.params.n();
  const int k = wp.params.k();
  const double c = wp.speed;
  double worst = 0.0;
  for (std::size_t i = 0; i < wp.xi.size(); ++i) {
    const double f = wp.phi[i];
    const double r = m[i] + c * d1[i] - ipow(f, k) * d1[i] + f * (1.0 - ipow(f, n));
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

bool AsymptoticsReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AsymptoticCheck& c) { return c.pass; });
}

const AsymptoticCheck& AsymptoticsReport::at(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw DomainError("no asymptotic check named '" + name + "'");
}

AsymptoticsReport verify_asymptotics(const WaveProfile& wp, double tol) {
  check_profile(wp);
  AsymptoticsReport rep;
  const std::size_t last = wp.xi.size() - 1;
  const double left_gap = std::abs(1.0 - wp.phi.front());
  const double right_gap = std::abs(wp.phi.back());
  rep.checks.push_back(check("phi_to_1_at_minus_infinity", left_gap < tol, left_gap, tol));
  rep.checks.push_back(check("phi_to_0_at_plus_infinity", right_gap < tol, right_gap, tol));
  rep.checks.push_back(check("dphi_to_0_at_minus_infinity", std::abs(wp.dphi.front()) < tol,
                             std::abs(wp.dphi.front()), tol));
  rep.checks.push_back(check("dphi_to_0_at_plus_infinity", std::abs(wp.dphi.back()) < tol,
                             std::abs(wp.dphi.back()), tol));

  bool bounded = true;
  bool decreasing = true;
  bool negative_slope = true;
  double worst_bound = 0.0;
  for (std::size_t i = 0; i <= last; ++i) {
    if (!(wp.phi[i] > 0.0 && wp.phi[i] < 1.0)) {
      bounded = false;
      worst_bound = std::max(worst_bound, std::max(-wp.phi[i], wp.phi[i] - 1.0));
    }
    if (i > 0 && !(wp.phi[i] < wp.phi[i - 1])) decreasing = false;
    if (i > 0 && i < last && !(wp.dphi[i] < 0.0)) negative_slope = false;
  }
  rep.checks.push_back(check("bounded_0_1", bounded, worst_bound, 0.0));
  rep.checks.push_back(check("strictly_decreasing", decreasing && negative_slope, 0.0, 0.0));

  const double departure = wp.dphi.front() / (wp.phi.front() - 1.0);
  rep.checks.push_back(check("departure_slope_at_E1_positive", departure > 0.0, departure, 0.0));
  const double approach = wp.dphi.back() / wp.phi.back();
  rep.checks.push_back(check("approach_slope_at_E0_negative", approach < 0.0, approach, 0.0));

  const double c = wp.speed;
  AsymptoticCheck eig{"approach_slope_matches_slow_eigenvector", true, false, 0.0, 0.1};
  if (c > 2.0 + kNodeBand) {
    const double lam = slow_eigen_slope(c);
    eig.applicable = true;
    eig.value = std::abs(approach / lam - 1.0);
    eig.pass = eig.value < eig.tol;
  }
  rep.checks.push_back(eig);
  return rep;
}

double profile_phi(const WaveProfile& wp, double xi) {
  check_profile(wp);
  if (xi < wp.xi.front()) return 1.0 - (1.0 - wp.phi.front()) * std::exp(left_rate(wp) * (xi - wp.xi.front()));
  if (xi > wp.xi.back()) return wp.phi.back() * std::exp(right_rate(wp) * (xi - wp.xi.back()));
  return hermite_phi(wp)(xi);
}

double profile_dphi(const WaveProfile& wp, double xi) {
  check_profile(wp);
  if (xi < wp.xi.front()) {
    const double q = left_rate(wp);
    return -q * (1.0 - wp.phi.front()) * std::exp(q * (xi - wp.xi.front()));
  }
  if (xi > wp.xi.back()) {
    const double r = right_rate(wp);
    return r * wp.phi.back() * std::exp(r * (xi - wp.xi.back()));
  }
  return hermite_phi(wp).prime(xi);
}

WaveProfile resample(const WaveProfile& wp, double a, double b, int count) {
  check_profile(wp);
  if (!(b > a) || count < 2) throw DomainError("resample needs a < b and at least two points");
  const Hermite h = hermite_phi(wp);
  WaveProfile out;
  out.params = wp.params;
  out.speed = wp.speed;
  for (int i = 0; i < count; ++i) {
    const double x = i + 1 == count ? b : a + (b - a) * i / (count - 1);
    out.xi.push_back(x);
    if (x >= wp.xi.front() && x <= wp.xi.back()) {
      out.phi.push_back(h(x));
      out.dphi.push_back(h.prime(x));
    } else {
      out.phi.push_back(profile_phi(wp, x));
      out.dphi.push_back(profile_dphi(wp, x));
    }
  }
  return out;
}

double profile_distance(const WaveProfile& a, const WaveProfile& b) {
  check_profile(a);
  check_profile(b);
  const Hermite hb = hermite_phi(b);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.xi.size(); ++i) {
    if (a.xi[i] < b.xi.front() || a.xi[i] > b.xi.back()) continue;
    worst = std::max(worst, std::abs(a.phi[i] - hb(a.xi[i])));
  }
  return worst;
}

}  // namespace bh
