#pragma once

#include <span>

namespace wec::kernels {

// Hot inner loops, each provided as an OpenMP-parallel routine plus a plain
// serial reference implementation. The parallel versions are the ones used by
// the library; the _ref versions are kept for correctness tests and for the
// kernel benchmark. Both orderings sum in the same sequence per output
// element, so results agree to the last bit.

/// out[i] = sum_k amp[k] * cos(omega[k] * (t0 + i*dt) + phase[k])
void superpose_harmonics(std::span<const double> omega, std::span<const double> amp,
                         std::span<const double> phase, double t0, double dt,
                         std::span<double> out);
void superpose_harmonics_ref(std::span<const double> omega, std::span<const double> amp,
                             std::span<const double> phase, double t0, double dt,
                             std::span<double> out);

/// out[j] = scale * integral f(w) cos(w * t[j]) dw for f piecewise linear on
/// the (ascending) grid. The per-segment integral is evaluated in closed form,
/// which stays accurate when t * dw is large and plain trapezoidal quadrature
/// of the oscillatory integrand breaks down.
void cosine_transform(std::span<const double> grid, std::span<const double> f,
                      std::span<const double> t, double scale, std::span<double> out);
void cosine_transform_ref(std::span<const double> grid, std::span<const double> f,
                          std::span<const double> t, double scale, std::span<double> out);

/// Radiation-memory convolution of a full velocity record:
/// out[i] = dt * sum_{j=0..L} w_j taps[j] v[i-j], trapezoidal weights
/// (w_0 = w_L = 1/2), with v treated as zero before the record start.
void convolve_kernel(std::span<const double> taps, std::span<const double> v, double dt,
                     std::span<double> out);
void convolve_kernel_ref(std::span<const double> taps, std::span<const double> v, double dt,
                         std::span<double> out);

}  // namespace wec::kernels
