#include "wec/est_fll.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "wec/estimators.hpp"

namespace wec {

namespace {

struct Deriv {
  double xi, nu, omega;
};

inline Deriv dynamics(double xi, double nu, double omega, double u, double kappa, double gamma) {
  const double xi_quad = omega * nu;
  const double err = u - xi;
  return {kappa * omega * err - omega * xi_quad, xi, -gamma * err * xi_quad * omega};
}

// Integration step for the continuous-time SOGI-FLL; the wave-sampling rate
// is far too coarse for direct discretization.
constexpr double kIntegrationDt = 0.05;

}  // namespace

double fll_step(FllState& st, double u0, double u_mid, double u1, double dt) {
  if (!(std::isfinite(u0) && std::isfinite(u_mid) && std::isfinite(u1))) {
    return st.omega_hat;  // hold previous state on a bad sample
  }
  const auto k1 = dynamics(st.xi, st.nu, st.omega_hat, u0, st.kappa, st.gamma);
  const auto k2 = dynamics(st.xi + 0.5 * dt * k1.xi, st.nu + 0.5 * dt * k1.nu,
                           st.omega_hat + 0.5 * dt * k1.omega, u_mid, st.kappa, st.gamma);
  const auto k3 = dynamics(st.xi + 0.5 * dt * k2.xi, st.nu + 0.5 * dt * k2.nu,
                           st.omega_hat + 0.5 * dt * k2.omega, u_mid, st.kappa, st.gamma);
  const auto k4 = dynamics(st.xi + dt * k3.xi, st.nu + dt * k3.nu,
                           st.omega_hat + dt * k3.omega, u1, st.kappa, st.gamma);
  st.xi += dt / 6.0 * (k1.xi + 2.0 * k2.xi + 2.0 * k3.xi + k4.xi);
  st.nu += dt / 6.0 * (k1.nu + 2.0 * k2.nu + 2.0 * k3.nu + k4.nu);
  st.omega_hat += dt / 6.0 * (k1.omega + 2.0 * k2.omega + 2.0 * k3.omega + k4.omega);
  st.omega_hat = std::clamp(st.omega_hat, st.omega_min, st.omega_max);
  return st.omega_hat;
}

TimeSeries fll_run(const TimeSeries& fe, const FllConfig& cfg) {
  const std::size_t n = fe.size();

  // Sliding-window rms normalization, seeded from the first full window.
  const auto w = std::min<std::size_t>(
      n, std::max<std::size_t>(2, static_cast<std::size_t>(std::lround(cfg.norm_window_s / fe.dt))));
  std::vector<double> csum(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) csum[i + 1] = csum[i] + fe.values[i] * fe.values[i];
  const double global_rms = std::sqrt(csum[n] / static_cast<double>(n));
  if (!(global_rms > 0.0)) throw std::runtime_error("fll_run: all-zero record, cannot normalize");
  const double floor = 1e-6 * global_rms;
  const double first_rms = std::sqrt(csum[w] / static_cast<double>(w));
  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r =
        (i + 1 < w) ? first_rms
                    : std::sqrt((csum[i + 1] - csum[i + 1 - w]) / static_cast<double>(w));
    u[i] = fe.values[i] / std::max(r, floor);
  }

  FllState st;
  st.kappa = cfg.kappa;
  st.gamma = cfg.gamma;
  st.omega_min = cfg.omega_min;
  st.omega_max = cfg.omega_max;
  st.omega_hat = coarse_peak_frequency(fe.values, fe.dt, cfg.omega_min, cfg.omega_max);

  const auto n_sub = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(fe.dt / kIntegrationDt)));
  const double h = fe.dt / static_cast<double>(n_sub);

  std::vector<double> omega(n);
  omega[0] = st.omega_hat;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double du = u[k + 1] - u[k];
    for (std::size_t s = 0; s < n_sub; ++s) {
      const double a0 = static_cast<double>(s) / static_cast<double>(n_sub);
      const double a1 = static_cast<double>(s + 1) / static_cast<double>(n_sub);
      fll_step(st, u[k] + a0 * du, u[k] + 0.5 * (a0 + a1) * du, u[k] + a1 * du, h);
    }
    omega[k + 1] = st.omega_hat;
  }
  return TimeSeries(fe.t0, fe.dt, std::move(omega));
}

}  // namespace wec
