#pragma once

#include <string>
#include <vector>

#include "bhphase/core.hpp"

namespace bh {

/// Traveling wave phi(xi), xi = z - c t, sampled on the integrator grid.
struct WaveProfile {
  std::vector<double> xi;
  std::vector<double> phi;
  std::vector<double> dphi;
  double speed = 2.0;
  Params params{1, 1, 2.0};
};

struct WaveOptions {
  double seed_eps = 1e-7;
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  double max_step = 0.005;
  double capture_radius = 1e-8;
  double max_s = 1e4;

  /// Throws ConfigError on non-positive values.
  void validate() const;
};

/// Heteroclinic orbit E1 -> E0 seeded on the unstable branch into 0 < x < 1,
/// shifted so that phi(0) = 1/2. Throws PreconditionError for c < 2 and
/// NumericalError if E0 is not reached within max_s.
WaveProfile shoot_heteroclinic(const Params& p, const WaveOptions& opt = {});

/// Max over the grid of |phi'' + c phi' - phi^k phi' + phi (1 - phi^n)| with
/// phi', phi'' taken from a clamped cubic spline through (xi, phi).
double wave_residual(const WaveProfile& wp);

struct AsymptoticCheck {
  std::string name;
  bool pass = false;
  /// False when the check does not apply (e.g. eigen-slope comparison at c = 2).
  bool applicable = true;
  double value = 0.0;
  double tol = 0.0;
};

struct AsymptoticsReport {
  std::vector<AsymptoticCheck> checks;

  bool all_pass() const;
  const AsymptoticCheck& at(const std::string& name) const;
};

/// Limits at both ends, 0 < phi < 1, monotonicity and slope directions at E1 and E0.
AsymptoticsReport verify_asymptotics(const WaveProfile& wp, double tol = 1e-6);

/// phi at xi: Hermite interpolation inside the grid, exponential tails outside.
double profile_phi(const WaveProfile& wp, double xi);
double profile_dphi(const WaveProfile& wp, double xi);

/// Uniform resampling over [a, b] with count >= 2 points.
WaveProfile resample(const WaveProfile& wp, double a, double b, int count);

/// Max |phi_a - phi_b| over the nodes of a lying inside the grid of b.
double profile_distance(const WaveProfile& a, const WaveProfile& b);

/// Slow-direction slope lambda_2 = (-c + sqrt(c^2 - 4)) / 2 of the E0 node.
double slow_eigen_slope(double c);

}  // namespace bh
