#include "wec/timeseries.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace wec {

TimeSeries::TimeSeries(double t0_, double dt_, std::vector<double> v)
    : t0(t0_), dt(dt_), values(std::move(v)) {
  if (!(dt > 0.0)) throw std::invalid_argument("TimeSeries: dt must be > 0");
  if (values.size() < 2) throw std::invalid_argument("TimeSeries: need at least 2 samples");
}

double sample_at(const TimeSeries& x, double t) {
  const double s = (t - x.t0) / x.dt;
  if (s <= 0.0) return x.values.front();
  const auto n = x.values.size();
  const auto i = static_cast<std::size_t>(s);
  if (i >= n - 1) return x.values.back();
  const double frac = s - static_cast<double>(i);
  return x.values[i] + frac * (x.values[i + 1] - x.values[i]);
}

TimeSeries resample(const TimeSeries& x, double dt_new) {
  if (!(dt_new > 0.0)) throw std::invalid_argument("resample: dt must be > 0");
  const auto n = static_cast<std::size_t>(std::floor(x.duration() / dt_new)) + 1;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = sample_at(x, x.t0 + static_cast<double>(i) * dt_new);
  }
  return TimeSeries(x.t0, dt_new, std::move(out));
}

double mean(std::span<const double> v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double y : v) s += y;
  return s / static_cast<double>(v.size());
}

double variance(std::span<const double> v) {
  if (v.size() < 2) return 0.0;
  const double m = mean(v);
  double s = 0.0;
  for (double y : v) s += (y - m) * (y - m);
  return s / static_cast<double>(v.size());
}

double rms(std::span<const double> v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double y : v) s += y * y;
  return std::sqrt(s / static_cast<double>(v.size()));
}

double trapz_uniform(std::span<const double> y, double dx) {
  if (y.size() < 2) return 0.0;
  double s = 0.5 * (y.front() + y.back());
  for (std::size_t i = 1; i + 1 < y.size(); ++i) s += y[i];
  return s * dx;
}

double trapz(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("trapz: size mismatch");
  if (x.size() < 2) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    s += 0.5 * (y[i] + y[i + 1]) * (x[i + 1] - x[i]);
  }
  return s;
}

}  // namespace wec
