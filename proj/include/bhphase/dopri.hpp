#pragma once

// Dormand-Prince 5(4) stepper with PI step-size control for planar fields.

#include <algorithm>
#include <cmath>

#include "bhphase/core.hpp"

namespace bh {

struct DopriStep {
  Vec2 y;      // fifth-order solution
  Vec2 dy;     // field at the new point (first stage of the next step)
  double err;  // scaled error norm; accept when <= 1
};

/// One trial step of size h from (y, f(y)).
template <class F>
DopriStep dopri_trial(F&& f, Vec2 y, Vec2 k1, double h, double rel_tol, double abs_tol) {
  const Vec2 k2 = f(y + (h / 5.0) * k1);
  const Vec2 k3 = f(y + h * ((3.0 / 40.0) * k1 + (9.0 / 40.0) * k2));
  const Vec2 k4 = f(y + h * ((44.0 / 45.0) * k1 + (-56.0 / 15.0) * k2 + (32.0 / 9.0) * k3));
  const Vec2 k5 = f(y + h * ((19372.0 / 6561.0) * k1 + (-25360.0 / 2187.0) * k2 + (64448.0 / 6561.0) * k3 +
                             (-212.0 / 729.0) * k4));
  const Vec2 k6 = f(y + h * ((9017.0 / 3168.0) * k1 + (-355.0 / 33.0) * k2 + (46732.0 / 5247.0) * k3 +
                             (49.0 / 176.0) * k4 + (-5103.0 / 18656.0) * k5));
  const Vec2 y5 = y + h * ((35.0 / 384.0) * k1 + (500.0 / 1113.0) * k3 + (125.0 / 192.0) * k4 +
                           (-2187.0 / 6784.0) * k5 + (11.0 / 84.0) * k6);
  const Vec2 k7 = f(y5);
  const Vec2 e = h * ((71.0 / 57600.0) * k1 + (-71.0 / 16695.0) * k3 + (71.0 / 1920.0) * k4 +
                      (-17253.0 / 339200.0) * k5 + (22.0 / 525.0) * k6 + (-1.0 / 40.0) * k7);
  const double sx = abs_tol + rel_tol * std::max(std::abs(y.x), std::abs(y5.x));
  const double sy = abs_tol + rel_tol * std::max(std::abs(y.y), std::abs(y5.y));
  const double ex = e.x / sx;
  const double ey = e.y / sy;
  double err = std::sqrt(0.5 * (ex * ex + ey * ey));
  if (!std::isfinite(err) || !std::isfinite(y5.x) || !std::isfinite(y5.y)) err = INFINITY;
  return {y5, k7, err};
}

/// Adaptive integrator state. Time runs forward in the stepper's own variable;
/// callers flip the field for backward integration.
template <class F>
class DopriStepper {
 public:
  DopriStepper(F f, Vec2 y0, double rel_tol, double abs_tol, double max_step)
      : f_(std::move(f)), y_(y0), dy_(f_(y0)), rel_(rel_tol), abs_(abs_tol), max_step_(max_step) {
    h_ = std::min(max_step_, 1e-3);
  }

  /// Takes one accepted step. Returns false when the step size underflows.
  bool advance() {
    for (int tries = 0; tries < 60; ++tries) {
      const double h = std::min(h_, max_step_);
      if (h < min_step_ * std::max(1.0, std::abs(t_))) return false;
      const DopriStep st = dopri_trial(f_, y_, dy_, h, rel_, abs_);
      if (st.err <= 1.0) {
        prev_y_ = y_;
        prev_dy_ = dy_;
        last_h_ = h;
        y_ = st.y;
        dy_ = st.dy;
        t_ += h;
        const double e = std::max(st.err, 1e-10);
        double fac = 0.9 * std::pow(e, -0.17) * std::pow(err_prev_, 0.04);
        if (rejected_) fac = std::min(fac, 1.0);
        h_ = h * std::clamp(fac, 0.2, 10.0);
        err_prev_ = e;
        rejected_ = false;
        return true;
      }
      rejected_ = true;
      const double fac = std::isfinite(st.err) ? 0.9 * std::pow(st.err, -0.2) : 0.1;
      h_ = h * std::clamp(fac, 0.1, 0.9);
    }
    return false;
  }

  /// State after integrating a fraction theta in [0, 1] of the last accepted step.
  Vec2 partial(double theta) const {
    if (theta <= 0.0) return prev_y_;
    return dopri_trial(f_, prev_y_, prev_dy_, theta * last_h_, rel_, abs_).y;
  }

  Vec2 y() const noexcept { return y_; }
  Vec2 dy() const noexcept { return dy_; }
  Vec2 prev_y() const noexcept { return prev_y_; }
  double t() const noexcept { return t_; }
  double last_h() const noexcept { return last_h_; }
  const F& field() const noexcept { return f_; }

 private:
  F f_;
  Vec2 y_;
  Vec2 dy_;
  Vec2 prev_y_{};
  Vec2 prev_dy_{};
  double rel_;
  double abs_;
  double max_step_;
  double h_ = 0.0;
  double last_h_ = 0.0;
  double t_ = 0.0;
  double err_prev_ = 1e-4;
  double min_step_ = 1e-14;
  bool rejected_ = false;
};

}  // namespace bh
