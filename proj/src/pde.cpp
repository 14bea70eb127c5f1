#include "bhphase/pde.hpp"

#include <algorithm>
#include <cmath>

#include "bhphase/equilibria.hpp"
#include "bhphase/errors.hpp"

namespace bh {
namespace {

void rhs(const Params& p, const std::vector<double>& w, double dz, std::vector<double>& out) {
  const std::size_t n = w.size();
  const double inv2 = 1.0 / (dz * dz);
  const double inv = 1.0 / dz;
  const int k = p.k();
  const int pn = p.n();
  out[0] = 0.0;
  out[n - 1] = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double wi = w[i];
    const double a = ipow(wi, k);
    const double wz = a >= 0.0 ? (wi - w[i - 1]) * inv : (w[i + 1] - wi) * inv;
    out[i] = (w[i + 1] - 2.0 * wi + w[i - 1]) * inv2 - a * wz + wi * (1.0 - ipow(wi, pn));
  }
}

}  // namespace

std::string_view to_string(PdeScheme) noexcept { return "upwind-heun"; }

double PdeConfig::time_step() const {
  if (dt > 0.0) return dt;
  const double h = dz();
  const double target = 0.35 * h * h;
  const double steps = std::ceil(T / target);
  return T / steps;
}

void PdeConfig::validate() const {
  if (!(L > 0.0) || !std::isfinite(L)) throw ConfigError("L must be positive");
  if (N < 3) throw ConfigError("N must be at least 3");
  if (!(T > 0.0) || !std::isfinite(T)) throw ConfigError("T must be positive");
  if (dt < 0.0 || !std::isfinite(dt)) throw ConfigError("dt must be non-negative");
  if (snapshot_stride < 0) throw ConfigError("snapshot stride must be non-negative");
  const double h = dz();
  if (time_step() > 0.4 * h * h) {
    throw ConfigError("dt = " + std::to_string(time_step()) + " exceeds the diffusion limit 0.4 dz^2 = " +
                      std::to_string(0.4 * h * h));
  }
}

PdeState make_state(const PdeConfig& cfg, std::vector<double> w) {
  if (static_cast<int>(w.size()) != cfg.N) throw ConfigError("state size does not match N");
  PdeState st;
  st.z.resize(static_cast<std::size_t>(cfg.N));
  for (int i = 0; i < cfg.N; ++i) st.z[static_cast<std::size_t>(i)] = -cfg.L + cfg.dz() * i;
  st.z.back() = cfg.L;
  st.w = std::move(w);
  return st;
}

PdeState state_from_profile(const WaveProfile& wp, const PdeConfig& cfg, double shift) {
  const WaveProfile r = resample(wp, -cfg.L - shift, cfg.L - shift, cfg.N);
  return make_state(cfg, r.phi);
}

PdeState step(const Params& p, const PdeState& st, const PdeConfig& cfg) {
  cfg.validate();
  if (static_cast<int>(st.w.size()) != cfg.N) throw ConfigError("state size does not match N");
  const double dt = cfg.time_step();
  const double dz = cfg.dz();
  const std::size_t n = st.w.size();
  std::vector<double> k1(n), k2(n), mid(n);
  rhs(p, st.w, dz, k1);
  for (std::size_t i = 0; i < n; ++i) mid[i] = st.w[i] + dt * k1[i];
  rhs(p, mid, dz, k2);
  PdeState out;
  out.z = st.z;
  out.w.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.w[i] = st.w[i] + 0.5 * dt * (k1[i] + k2[i]);
  out.t = st.t + dt;
  return out;
}

double front_position(const PdeState& st, double level) {
  std::size_t found = 0;
  double z = 0.0;
  for (std::size_t i = 0; i + 1 < st.w.size(); ++i) {
    const double a = st.w[i] - level;
    const double b = st.w[i + 1] - level;
    if (a >= 0.0 && b < 0.0) {
      ++found;
      z = a == 0.0 ? st.z[i] : st.z[i] + (st.z[i + 1] - st.z[i]) * a / (a - b);
    }
  }
  if (found == 0) throw NumericalError("no decreasing crossing of level " + std::to_string(level));
  if (found > 1) throw NumericalError("multiple decreasing crossings of level " + std::to_string(level));
  return z;
}

double shape_drift(const PdeState& initial, const PdeState& final_state, double shift, double margin) {
  const double lo = initial.z.front() + margin;
  const double hi = initial.z.back() - margin;
  const double dz = initial.z[1] - initial.z[0];
  double worst = 0.0;
  for (std::size_t i = 0; i < initial.z.size(); ++i) {
    const double z = initial.z[i];
    const double zs = z + shift;
    if (z < lo || z > hi || zs < lo || zs > hi) continue;
    const double pos = (zs - initial.z.front()) / dz;
    const auto j = std::min(static_cast<std::size_t>(pos), final_state.w.size() - 2);
    const double f = pos - static_cast<double>(j);
    const double w = (1.0 - f) * final_state.w[j] + f * final_state.w[j + 1];
    worst = std::max(worst, std::abs(w - initial.w[i]));
  }
  return worst;
}

SpeedReport speed_estimate(const Params& p, const WaveProfile& wp, const PdeConfig& cfg) {
  cfg.validate();
  if (p.c() < 2.0 && std::abs(p.c() - 2.0) >= kNodeBand) {
    throw PreconditionError("the PDE cross-check needs a wave speed c >= 2");
  }
  const double dt = cfg.time_step();
  const long steps = std::lround(cfg.T / dt);
  const long record_every = std::max(1L, steps / 400);

  SpeedReport rep;
  PdeState st = state_from_profile(wp, cfg, -p.c() * cfg.T / 2.0);
  rep.initial = st;
  rep.max_w = *std::max_element(st.w.begin(), st.w.end());
  rep.min_w = *std::min_element(st.w.begin(), st.w.end());
  rep.times.push_back(0.0);
  rep.fronts.push_back(front_position(st));
  if (cfg.snapshot_stride > 0) rep.snapshots.push_back({0.0, st.w});

  for (long s = 1; s <= steps; ++s) {
    st = step(p, st, cfg);
    st.t = static_cast<double>(s) * dt;
    const auto [mn, mx] = std::minmax_element(st.w.begin(), st.w.end());
    rep.min_w = std::min(rep.min_w, *mn);
    rep.max_w = std::max(rep.max_w, *mx);
    if (s % record_every == 0 || s == steps) {
      rep.times.push_back(st.t);
      rep.fronts.push_back(front_position(st));
    }
    if (cfg.snapshot_stride > 0 && s % cfg.snapshot_stride == 0) rep.snapshots.push_back({st.t, st.w});
  }
  rep.final_state = st;

  double st_sum = 0.0, sf = 0.0, stt = 0.0, stf = 0.0;
  int count = 0;
  for (std::size_t i = 0; i < rep.times.size(); ++i) {
    if (rep.times[i] < 0.5 * cfg.T) continue;
    st_sum += rep.times[i];
    sf += rep.fronts[i];
    stt += rep.times[i] * rep.times[i];
    stf += rep.times[i] * rep.fronts[i];
    ++count;
  }
  if (count < 2) throw NumericalError("too few front samples for a speed fit");
  rep.speed = (count * stf - st_sum * sf) / (count * stt - st_sum * st_sum);
  rep.relative_error = std::abs(rep.speed - p.c()) / p.c();
  rep.shape_drift = shape_drift(rep.initial, rep.final_state, rep.speed * cfg.T);
  return rep;
}

}  // namespace bh
