#pragma once

#include "wec/constants.hpp"
#include "wec/timeseries.hpp"

namespace wec {

struct FllConfig {
  double kappa = 1.4142135623730951;  // sqrt(2): bandpass selectivity
  double gamma = 0.16;                // frequency-loop integral gain
  double norm_window_s = 120.0;       // sliding rms window for normalization
  double omega_min = constants::kOmegaMin;
  double omega_max = constants::kOmegaMax;
};

/// SOGI-FLL state. xi tracks the (normalized) input, xi* = omega_hat * nu is
/// the quadrature output lagging xi by 90 degrees.
struct FllState {
  double xi = 0.0;
  double nu = 0.0;
  double omega_hat = 1.0;
  double kappa = 1.4142135623730951;
  double gamma = 0.16;
  double omega_min = constants::kOmegaMin;
  double omega_max = constants::kOmegaMax;
};

/// One RK4 step of the SOGI-FLL dynamics with the normalized input linearly
/// interpolated across the step (u0, u_mid, u1 at t, t+dt/2, t+dt).
double fll_step(FllState& st, double u0, double u_mid, double u1, double dt);

/// Zero-order-hold convenience overload.
inline double fll_step(FllState& st, double u, double dt) { return fll_step(st, u, u, u, dt); }

/// Normalizes the force by a sliding-window rms and integrates the SOGI-FLL
/// at a fine internal step; output on the input time base.
TimeSeries fll_run(const TimeSeries& fe, const FllConfig& cfg = {});

}  // namespace wec
