#pragma once

#include <cstdint>
#include <filesystem>

#include "wec/spectrum.hpp"
#include "wec/timeseries.hpp"

namespace wec {

/// One-sided PSD estimate (rad/s) by segment-averaged periodogram:
/// 256-sample segments (shortened to the largest power of two that fits for
/// short records), 50% overlap, Hann taper, record mean removed.
/// Requires at least 64 samples.
Spectrum estimate_spectrum(const TimeSeries& x);

/// Harmonic superposition with uniform random phases on an equal-spacing
/// frequency grid resampled from spec. Deterministic for a given seed.
TimeSeries synthesize_sea(const Spectrum& spec, double duration_s, double dt_s,
                          std::uint64_t seed);

/// Reads a `time_s,elevation_m` CSV. Rejects malformed rows (by line number),
/// non-finite values and non-uniform sampling (tolerance 1e-6 * dt).
/// dt_expected <= 0 skips the sample-interval check.
TimeSeries load_elevation(const std::filesystem::path& path, double dt_expected);

/// Writes the CSV format accepted by load_elevation; values round-trip
/// bit-exactly.
void save_elevation(const std::filesystem::path& path, const TimeSeries& x);

}  // namespace wec
