#pragma once

#include <cstddef>
#include <vector>

#include "wec/constants.hpp"
#include "wec/timeseries.hpp"

namespace wec {

struct HhtConfig {
  double sd_threshold = 0.2;  // envelope-to-signal rms ratio accepted as an IMF
  int max_sift = 100;
  double smoothing_s = 2.0;   // moving-average window for the frequency track
  int n_imf_max = -1;         // <= 0: floor(log2(Ns)) - 1
  double omega_min = constants::kOmegaMin;
  double omega_max = constants::kOmegaMax;
};

/// Empirical-mode decomposition result. Sum of IMFs plus residue reconstructs
/// the input exactly (each IMF is formed by subtraction).
struct ImfSet {
  std::vector<TimeSeries> imfs;  // highest-frequency mode first
  TimeSeries residue;
  std::vector<double> energies;  // trapezoidal integral of c_i^2 dt
  double source_energy = 0.0;
};

/// Sifts the record into up to n_max IMFs (n_max <= 0 selects the default).
/// Inputs with fewer than 4 interior extrema come back unchanged as residue.
ImfSet emd_decompose(const TimeSeries& fe, int n_max = -1, const HhtConfig& cfg = {});

/// Index of the IMF with the largest energy fraction; ties resolve to the
/// lowest (highest-frequency) index.
std::size_t dominant_imf(const ImfSet& set);

struct AnalyticSignal {
  TimeSeries amplitude;
  TimeSeries phase;  // unwrapped
};

/// Analytic signal by the frequency-domain construction (negative frequencies
/// zeroed, positive doubled). Requires at least 64 samples.
AnalyticSignal hilbert_analytic(const TimeSeries& c);

/// Central-difference derivative of the unwrapped phase, moving-average
/// smoothed over smoothing_s and clamped to [omega_min, omega_max].
TimeSeries inst_frequency(const TimeSeries& phase, double smoothing_s,
                          double omega_min = constants::kOmegaMin,
                          double omega_max = constants::kOmegaMax);

struct FreqTrack {
  TimeSeries omega;
  TimeSeries amplitude;
  std::size_t dominant_index = 0;
};

/// Full pipeline: decompose, pick the dominant IMF, Hilbert transform it and
/// differentiate its phase.
FreqTrack hht_run(const TimeSeries& fe, const HhtConfig& cfg = {});

/// Interior strict extrema count plus zero crossings, used by the IMF
/// acceptance check.
struct OscillationCounts {
  std::size_t maxima = 0;
  std::size_t minima = 0;
  std::size_t zero_crossings = 0;
};
OscillationCounts count_oscillations(const std::vector<double>& v);

}  // namespace wec
