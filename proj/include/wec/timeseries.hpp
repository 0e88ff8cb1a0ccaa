#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wec {

/// Uniformly sampled real-valued signal.
struct TimeSeries {
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<double> values;

  TimeSeries() = default;
  TimeSeries(double t0, double dt, std::vector<double> v);

  std::size_t size() const { return values.size(); }
  double time(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }
  double end_time() const { return time(values.size() - 1); }
  double duration() const { return dt * static_cast<double>(values.size() - 1); }
};

/// Linear interpolation at time t, clamped to the record ends.
double sample_at(const TimeSeries& x, double t);

/// Linear resampling onto a uniform grid with spacing dt_new spanning the
/// same interval (last partial step dropped).
TimeSeries resample(const TimeSeries& x, double dt_new);

double mean(std::span<const double> v);
double variance(std::span<const double> v);
double rms(std::span<const double> v);

/// Trapezoidal integral of uniformly spaced samples.
double trapz_uniform(std::span<const double> y, double dx);

/// Trapezoidal integral of y(x) over an ascending grid.
double trapz(std::span<const double> x, std::span<const double> y);

}  // namespace wec
