#include "wec/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "wec/constants.hpp"
#include "wec/fft.hpp"

namespace wec {

EstimatorMethod estimator_from_name(const std::string& name) {
  if (name == "ekf") return EstimatorMethod::ekf;
  if (name == "fll") return EstimatorMethod::fll;
  if (name == "hht") return EstimatorMethod::hht;
  throw std::invalid_argument("unknown estimator method: " + name);
}

std::string estimator_name(EstimatorMethod m) {
  switch (m) {
    case EstimatorMethod::ekf: return "ekf";
    case EstimatorMethod::fll: return "fll";
    case EstimatorMethod::hht: return "hht";
  }
  return "?";
}

double coarse_peak_frequency(std::span<const double> x, double dt, double w_min, double w_max,
                             std::size_t n_samples) {
  const std::size_t n = std::min(x.size(), n_samples);
  if (n < 8 || !(dt > 0.0)) return std::clamp(1.0, w_min, w_max);
  std::vector<double> seg(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
  const double m = mean(seg);
  for (double& v : seg) v -= m;

  const auto spec = fft::forward(std::span<const double>(seg));
  const double dw = 2.0 * constants::kPi / (static_cast<double>(n) * dt);
  double best_power = 0.0;
  double best_w = std::clamp(1.0, w_min, w_max);
  for (std::size_t k = 1; k <= n / 2; ++k) {
    const double w = static_cast<double>(k) * dw;
    if (w < w_min || w > w_max) continue;
    const double p = std::norm(spec[k]);
    if (p > best_power) {
      best_power = p;
      best_w = w;
    }
  }
  return best_w;
}

}  // namespace wec
