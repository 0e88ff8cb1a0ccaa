#pragma once

#include <complex>
#include <span>
#include <vector>

namespace wec::fft {

// Thin wrappers around FFTW (complex, double precision, arbitrary length).
// Plan creation is serialized internally; execution is thread-safe.

std::vector<std::complex<double>> forward(std::span<const std::complex<double>> x);
std::vector<std::complex<double>> forward(std::span<const double> x);

/// Inverse transform, scaled by 1/N.
std::vector<std::complex<double>> inverse(std::span<const std::complex<double>> x);

}  // namespace wec::fft
