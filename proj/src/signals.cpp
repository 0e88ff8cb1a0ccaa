#include "wec/signals.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "wec/constants.hpp"
#include "wec/fft.hpp"
#include "wec/kernels.hpp"

namespace wec {

using constants::kPi;

Spectrum estimate_spectrum(const TimeSeries& x) {
  const std::size_t n = x.size();
  if (n < 64) throw std::runtime_error("estimate_spectrum: insufficient data, need >= 64 samples");

  std::size_t seg = 256;
  while (seg > n) seg /= 2;
  const std::size_t hop = seg / 2;
  const std::size_t n_seg = (n - seg) / hop + 1;

  const double m = mean(x.values);

  // Hann taper and its mean-square normalization.
  std::vector<double> win(seg);
  double u = 0.0;
  for (std::size_t i = 0; i < seg; ++i) {
    win[i] = 0.5 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(i) / static_cast<double>(seg)));
    u += win[i] * win[i];
  }
  u /= static_cast<double>(seg);

  std::vector<double> acc(seg / 2 + 1, 0.0);
  std::vector<double> buf(seg);
  for (std::size_t s = 0; s < n_seg; ++s) {
    for (std::size_t i = 0; i < seg; ++i) buf[i] = (x.values[s * hop + i] - m) * win[i];
    const auto spec = fft::forward(std::span<const double>(buf));
    for (std::size_t k = 0; k <= seg / 2; ++k) acc[k] += std::norm(spec[k]);
  }

  // One-sided PSD over cyclic frequency, then rescaled to rad/s. The DC bin
  // is dropped so the grid starts above zero.
  const double norm = x.dt / (static_cast<double>(seg) * u * static_cast<double>(n_seg));
  std::vector<double> omega(seg / 2), density(seg / 2);
  for (std::size_t k = 1; k <= seg / 2; ++k) {
    const double one_sided = (k < seg / 2) ? 2.0 : 1.0;
    omega[k - 1] = 2.0 * kPi * static_cast<double>(k) / (static_cast<double>(seg) * x.dt);
    density[k - 1] = one_sided * norm * acc[k] / (2.0 * kPi);
  }
  return Spectrum(std::move(omega), std::move(density));
}

TimeSeries synthesize_sea(const Spectrum& spec, double duration_s, double dt_s,
                          std::uint64_t seed) {
  if (!(dt_s > 0.0) || !(duration_s > 2.0 * dt_s)) {
    throw std::invalid_argument("synthesize_sea: bad duration or dt");
  }
  const auto n = static_cast<std::size_t>(std::floor(duration_s / dt_s)) + 1;

  double peak = 0.0;
  for (double d : spec.density) peak = std::max(peak, d);
  if (peak == 0.0) return TimeSeries(0.0, dt_s, std::vector<double>(n, 0.0));

  const double nyquist = kPi / dt_s;
  if (nyquist < spec.omega.back()) {
    throw std::runtime_error("synthesize_sea: aliasing, dt too coarse for the spectrum grid");
  }

  // Equal-spacing component grid; the resulting record period exceeds the
  // requested duration so the series does not repeat inside the record.
  const double w_lo = spec.omega.front();
  const double w_hi = spec.omega.back();
  const double dw = 2.0 * kPi / (1.15 * duration_s);
  const auto n_comp = static_cast<std::size_t>(std::ceil((w_hi - w_lo) / dw));
  if (n_comp == 0) throw std::invalid_argument("synthesize_sea: degenerate frequency band");

  std::vector<double> wk(n_comp), amp(n_comp), phase(n_comp);
  std::mt19937_64 rng(seed);
  std::size_t grid_pos = 0;
  for (std::size_t k = 0; k < n_comp; ++k) {
    const double w = w_lo + (static_cast<double>(k) + 0.5) * dw;
    while (grid_pos + 2 < spec.omega.size() && spec.omega[grid_pos + 1] < w) ++grid_pos;
    const double w0 = spec.omega[grid_pos], w1 = spec.omega[grid_pos + 1];
    const double frac = std::clamp((w - w0) / (w1 - w0), 0.0, 1.0);
    const double s = spec.density[grid_pos] + frac * (spec.density[grid_pos + 1] - spec.density[grid_pos]);
    wk[k] = w;
    amp[k] = std::sqrt(2.0 * std::max(s, 0.0) * dw);
    // Explicit 53-bit mapping keeps the phase draw implementation-independent.
    phase[k] = 2.0 * kPi * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  }

  std::vector<double> out(n);
  kernels::superpose_harmonics(wk, amp, phase, 0.0, dt_s, out);
  return TimeSeries(0.0, dt_s, std::move(out));
}

namespace {

double parse_field(const std::string& field, std::size_t line_no, const char* name) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(field, &pos);
    if (pos != field.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("load_elevation: malformed " + std::string(name) + " at line " +
                             std::to_string(line_no));
  }
}

}  // namespace

TimeSeries load_elevation(const std::filesystem::path& path, double dt_expected) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_elevation: cannot open " + path.string());

  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("load_elevation: empty file " + path.string());
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "time_s,elevation_m") {
    throw std::runtime_error("load_elevation: bad header in " + path.string() +
                             ", expected time_s,elevation_m");
  }

  std::vector<double> t, v;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error("load_elevation: missing field at line " + std::to_string(line_no));
    }
    const double ti = parse_field(line.substr(0, comma), line_no, "time");
    const double vi = parse_field(line.substr(comma + 1), line_no, "elevation");
    if (!std::isfinite(vi) || !std::isfinite(ti)) {
      throw std::runtime_error("load_elevation: non-finite value at line " + std::to_string(line_no));
    }
    t.push_back(ti);
    v.push_back(vi);
  }
  if (t.size() < 2) throw std::runtime_error("load_elevation: need at least 2 samples");

  const double dt = t[1] - t[0];
  if (!(dt > 0.0)) throw std::runtime_error("load_elevation: non-increasing timestamps");
  if (dt_expected > 0.0 && std::abs(dt - dt_expected) > 1e-6 * dt_expected) {
    throw std::runtime_error("load_elevation: sample interval mismatch");
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double expect = t[0] + static_cast<double>(i) * dt;
    if (std::abs(t[i] - expect) > 1e-6 * dt) {
      throw std::runtime_error("load_elevation: non-uniform sampling at line " +
                               std::to_string(i + 2));
    }
  }
  return TimeSeries(t[0], dt, std::move(v));
}

void save_elevation(const std::filesystem::path& path, const TimeSeries& x) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("save_elevation: cannot open " + path.string());
  out << "time_s,elevation_m\n";
  char buf[64];
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", x.time(i));
    out << buf << ',';
    std::snprintf(buf, sizeof(buf), "%.17g", x.values[i]);
    out << buf << '\n';
  }
  if (!out) throw std::runtime_error("save_elevation: write failed for " + path.string());
}

}  // namespace wec
