#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bhphase/core.hpp"
#include "bhphase/wave.hpp"

namespace bh {

/// Solution on a uniform grid over [-L, L]; end values are held fixed.
struct PdeState {
  std::vector<double> z;
  std::vector<double> w;
  double t = 0.0;

  double dz() const { return z[1] - z[0]; }
};

enum class PdeScheme { UpwindHeun };

std::string_view to_string(PdeScheme s) noexcept;

struct PdeConfig {
  double L = 60.0;
  int N = 4096;
  double T = 10.0;
  /// Time step; zero selects 0.35 dz^2 adjusted to divide T evenly.
  double dt = 0.0;
  PdeScheme scheme = PdeScheme::UpwindHeun;
  /// Snapshot interval in steps for the recorded (t, z, w) history; zero disables.
  int snapshot_stride = 0;

  double dz() const { return 2.0 * L / (N - 1); }
  /// Effective time step after resolving dt = 0.
  double time_step() const;
  /// Throws ConfigError when dt > 0.4 dz^2 or any field is out of range.
  void validate() const;
};

/// Uniform grid over [-L, L] with the given values.
PdeState make_state(const PdeConfig& cfg, std::vector<double> w);

/// w(z, 0) = phi(z - shift), with exponential tails outside the profile's grid.
PdeState state_from_profile(const WaveProfile& wp, const PdeConfig& cfg, double shift);

/// One Heun step of w_t = w_zz - w^k w_z + w (1 - w^n): central diffusion,
/// upwind advection, Dirichlet ends.
PdeState step(const Params& p, const PdeState& st, const PdeConfig& cfg);

/// Location of the unique decreasing crossing of `level`, by linear interpolation.
/// Throws NumericalError when there is no crossing or more than one.
double front_position(const PdeState& st, double level = 0.5);

struct Snapshot {
  double t = 0.0;
  std::vector<double> w;
};

struct SpeedReport {
  double speed = 0.0;
  double relative_error = 0.0;
  double shape_drift = 0.0;
  double max_w = 0.0;
  double min_w = 0.0;
  std::vector<double> times;
  std::vector<double> fronts;
  std::vector<Snapshot> snapshots;
  PdeState initial;
  PdeState final_state;
};

/// Evolves the wave profile to T and fits the front speed over the second half
/// of the run by least squares. Throws PreconditionError for c < 2.
SpeedReport speed_estimate(const Params& p, const WaveProfile& wp, const PdeConfig& cfg = {});

/// max |w(z + s, T) - w(z, 0)| over interior z, w(., T) linearly interpolated.
double shape_drift(const PdeState& initial, const PdeState& final_state, double shift, double margin = 5.0);

}  // namespace bh
