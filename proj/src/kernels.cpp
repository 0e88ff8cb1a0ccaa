#include "wec/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace wec::kernels {

namespace {

inline double superpose_at(std::span<const double> omega, std::span<const double> amp,
                           std::span<const double> phase, double t) {
  double acc = 0.0;
  for (std::size_t k = 0; k < omega.size(); ++k) {
    acc += amp[k] * std::cos(omega[k] * t + phase[k]);
  }
  return acc;
}

// Closed-form integral of the linear interpolant of f against cos(w*t) over
// one grid segment. Difference-of-trig terms are written as products so the
// evaluation stays stable for small t * dw.
inline double cosine_segment(double w1, double w2, double f1, double f2, double t) {
  const double dw = w2 - w1;
  if (t == 0.0) return 0.5 * (f1 + f2) * dw;
  const double wm = 0.5 * (w1 + w2);
  const double b = (f2 - f1) / dw;
  const double sh = std::sin(0.5 * dw * t);
  const double a_term = f1 * 2.0 * std::cos(wm * t) * sh / t;
  const double b_term = b * (dw * std::sin(w2 * t) / t - 2.0 * std::sin(wm * t) * sh / (t * t));
  return a_term + b_term;
}

inline double cosine_at(std::span<const double> grid, std::span<const double> f, double t) {
  double acc = 0.0;
  for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
    acc += cosine_segment(grid[j], grid[j + 1], f[j], f[j + 1], t);
  }
  return acc;
}

inline double convolve_at(std::span<const double> taps, std::span<const double> v, double dt,
                          std::size_t i) {
  const std::size_t lag_max = std::min(taps.size() - 1, i);
  double acc = 0.0;
  for (std::size_t j = 0; j <= lag_max; ++j) {
    const double w = (j == 0 || j == taps.size() - 1) ? 0.5 : 1.0;
    acc += w * taps[j] * v[i - j];
  }
  return acc * dt;
}

void check_sizes(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string("kernels: size mismatch in ") + what);
}

}  // namespace

void superpose_harmonics(std::span<const double> omega, std::span<const double> amp,
                         std::span<const double> phase, double t0, double dt,
                         std::span<double> out) {
  check_sizes(omega.size(), amp.size(), "superpose_harmonics");
  check_sizes(omega.size(), phase.size(), "superpose_harmonics");
  const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = superpose_at(omega, amp, phase, t0 + static_cast<double>(i) * dt);
  }
}

void superpose_harmonics_ref(std::span<const double> omega, std::span<const double> amp,
                             std::span<const double> phase, double t0, double dt,
                             std::span<double> out) {
  check_sizes(omega.size(), amp.size(), "superpose_harmonics_ref");
  check_sizes(omega.size(), phase.size(), "superpose_harmonics_ref");
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = superpose_at(omega, amp, phase, t0 + static_cast<double>(i) * dt);
  }
}

void cosine_transform(std::span<const double> grid, std::span<const double> f,
                      std::span<const double> t, double scale, std::span<double> out) {
  check_sizes(grid.size(), f.size(), "cosine_transform");
  check_sizes(t.size(), out.size(), "cosine_transform");
  const auto n = static_cast<std::ptrdiff_t>(t.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    const auto i = static_cast<std::size_t>(j);
    out[i] = scale * cosine_at(grid, f, t[i]);
  }
}

void cosine_transform_ref(std::span<const double> grid, std::span<const double> f,
                          std::span<const double> t, double scale, std::span<double> out) {
  check_sizes(grid.size(), f.size(), "cosine_transform_ref");
  check_sizes(t.size(), out.size(), "cosine_transform_ref");
  for (std::size_t j = 0; j < t.size(); ++j) {
    out[j] = scale * cosine_at(grid, f, t[j]);
  }
}

void convolve_kernel(std::span<const double> taps, std::span<const double> v, double dt,
                     std::span<double> out) {
  check_sizes(v.size(), out.size(), "convolve_kernel");
  if (taps.empty()) throw std::invalid_argument("convolve_kernel: empty taps");
  const auto n = static_cast<std::ptrdiff_t>(v.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = convolve_at(taps, v, dt, static_cast<std::size_t>(i));
  }
}

void convolve_kernel_ref(std::span<const double> taps, std::span<const double> v, double dt,
                         std::span<double> out) {
  check_sizes(v.size(), out.size(), "convolve_kernel_ref");
  if (taps.empty()) throw std::invalid_argument("convolve_kernel_ref: empty taps");
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = convolve_at(taps, v, dt, i);
  }
}

}  // namespace wec::kernels
