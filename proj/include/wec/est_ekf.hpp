#pragma once

#include <array>

#include "wec/constants.hpp"
#include "wec/timeseries.hpp"

namespace wec {

struct EkfConfig {
  // Negative entries are resolved at init time: r from the measured force
  // variance, q_psi from r.
  double q_psi = -1.0;               // process noise on the phasor states
  double q_omega = 1e-6;             // frequency random-walk variance, rad^2/s^2
  double r = -1.0;                   // measurement noise variance
  double omega_min = constants::kOmegaMin;
  double omega_max = constants::kOmegaMax;
};

/// Harmonic-model EKF state: x = [psi, psi*, omega], P row-major 3x3.
struct EkfState {
  std::array<double, 3> x{};
  std::array<double, 9> p{};
  double q_psi = 0.0;
  double q_omega = 0.0;
  double r = 0.0;
  double ts = 0.0;
  double omega_min = constants::kOmegaMin;
  double omega_max = constants::kOmegaMax;
};

struct EkfStepResult {
  double omega_hat;
  double amplitude;
};

/// Initial state: psi seeded from the first sample, omega from a coarse
/// periodogram of the first 128 samples, P0 = diag(r, r, 0.25).
EkfState ekf_init(const TimeSeries& fe, const EkfConfig& cfg = {});

/// One predict + innovate cycle on measurement fe_k. On a numerically
/// degenerate innovation covariance the update is skipped and the prior kept.
EkfStepResult ekf_step(EkfState& st, double fe_k);

/// Sequential filter over the record; output on the same time base.
TimeSeries ekf_run(const TimeSeries& fe, const EkfConfig& cfg = {});

}  // namespace wec
