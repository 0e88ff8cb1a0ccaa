#include "wec/hydro.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "wec/constants.hpp"
#include "wec/fft.hpp"
#include "wec/kernels.hpp"

namespace wec {

using constants::kPi;

namespace {

void validate_table(const HydroTable& t) {
  const auto n = t.omega.size();
  if (n < 2) throw std::runtime_error("hydro table: need at least 2 grid points");
  if (t.added_mass.size() != n || t.radiation_damping.size() != n ||
      t.excitation_gain.size() != n || t.excitation_phase.size() != n) {
    throw std::runtime_error("hydro table: column length mismatch");
  }
  if (!(t.omega.front() > 0.0)) throw std::runtime_error("hydro table: grid must start above 0");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(t.omega[i + 1] > t.omega[i])) {
      throw std::runtime_error("hydro table: grid not strictly ascending");
    }
  }
  double b_max = 0.0;
  for (double b : t.radiation_damping) {
    if (!(b >= 0.0)) throw std::runtime_error("hydro table: radiation damping must be >= 0");
    b_max = std::max(b_max, b);
  }
  if (b_max > 0.0 && (t.radiation_damping.front() > 0.01 * b_max ||
                      t.radiation_damping.back() > 0.01 * b_max)) {
    throw std::runtime_error("hydro table: radiation damping must vanish at the grid ends");
  }
  for (double mr : t.added_mass) {
    if (!(t.mass + mr > 0.0)) throw std::runtime_error("hydro table: m + m_r must be > 0");
  }
  if (!(t.mass > 0.0) || !(t.stiffness > 0.0) || !(t.radius > 0.0)) {
    throw std::runtime_error("hydro table: mass, stiffness and radius must be > 0");
  }
  // Resonance identity must bracket a root inside the grid.
  auto reactance = [&](std::size_t i) {
    return t.omega[i] * t.omega[i] * (t.mass + t.added_mass[i]) - t.stiffness;
  };
  if (!(reactance(0) < 0.0) || !(reactance(n - 1) > 0.0)) {
    throw std::runtime_error("hydro table: no resonance inside the grid");
  }
}

std::vector<double> get_array(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw std::runtime_error(std::string("hydro table: missing field ") + key);
  return j.at(key).get<std::vector<double>>();
}

double get_number(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw std::runtime_error(std::string("hydro table: missing field ") + key);
  return j.at(key).get<double>();
}

}  // namespace

HydroTable load_hydro_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_hydro_table: cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("load_hydro_table: parse error in " + path.string() + ": " + e.what());
  }
  HydroTable t;
  t.omega = get_array(j, "omega");
  t.added_mass = get_array(j, "added_mass");
  t.radiation_damping = get_array(j, "radiation_damping");
  t.excitation_gain = get_array(j, "excitation_gain");
  t.excitation_phase = get_array(j, "excitation_phase");
  t.m_inf = get_number(j, "m_inf");
  t.mass = get_number(j, "mass");
  t.stiffness = get_number(j, "stiffness");
  t.radius = get_number(j, "radius");
  validate_table(t);
  return t;
}

HydroCoeffs interp_coeffs(const HydroTable& table, double w) {
  if (!(w > 0.0)) throw std::invalid_argument("interp_coeffs: w must be > 0");
  const auto& grid = table.omega;
  if (w <= grid.front()) {
    return {table.added_mass.front(), table.radiation_damping.front(),
            table.excitation_gain.front(), table.excitation_phase.front()};
  }
  if (w >= grid.back()) {
    // Asymptotics above the grid: added mass settles to m_inf, damping and
    // excitation gain roll off to zero for this low-pass body.
    return {table.m_inf, 0.0, table.excitation_gain.back(), table.excitation_phase.back()};
  }
  const auto it = std::upper_bound(grid.begin(), grid.end(), w);
  const auto i = static_cast<std::size_t>(std::distance(grid.begin(), it)) - 1;
  const double frac = (w - grid[i]) / (grid[i + 1] - grid[i]);
  auto lerp = [&](const std::vector<double>& col) {
    return col[i] + frac * (col[i + 1] - col[i]);
  };
  return {lerp(table.added_mass), lerp(table.radiation_damping),
          lerp(table.excitation_gain), lerp(table.excitation_phase)};
}

RadiationKernel radiation_kernel(const HydroTable& table, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("radiation_kernel: dt must be > 0");
  constexpr double kMaxMemory = 60.0;
  const auto n = static_cast<std::size_t>(std::floor(kMaxMemory / dt)) + 1;
  std::vector<double> times(n);
  for (std::size_t k = 0; k < n; ++k) times[k] = static_cast<double>(k) * dt;

  std::vector<double> taps(n);
  kernels::cosine_transform(table.omega, table.radiation_damping, times, 2.0 / kPi, taps);

  double peak = 0.0;
  for (double h : taps) peak = std::max(peak, std::abs(h));
  RadiationKernel kernel;
  kernel.dt = dt;
  if (peak == 0.0) {
    kernel.taps = {0.0, 0.0};
    kernel.memory_length = dt;
    return kernel;
  }

  std::size_t last = n - 1;
  while (last > 0 && std::abs(taps[last]) < 0.01 * peak) --last;
  if (last == n - 1) {
    throw std::runtime_error("radiation_kernel: kernel has not decayed within 60 s");
  }
  kernel.taps.assign(taps.begin(), taps.begin() + static_cast<std::ptrdiff_t>(last) + 1);
  kernel.memory_length = static_cast<double>(last) * dt;
  return kernel;
}

TimeSeries excitation_force(const HydroTable& table, const TimeSeries& zeta) {
  const std::size_t n = zeta.size();
  if (n < 64) throw std::runtime_error("excitation_force: record shorter than 64 samples");

  auto spec = fft::forward(std::span<const double>(zeta.values));
  const double dw = 2.0 * kPi / (static_cast<double>(n) * zeta.dt);

  auto response = [&](double w) -> std::complex<double> {
    const auto c = interp_coeffs(table, w);
    return std::polar(c.excitation_gain, c.excitation_phase);
  };

  // DC (and Nyquist for even n) must stay real to keep the output real.
  spec[0] *= table.excitation_gain.front();
  for (std::size_t k = 1; k < (n + 1) / 2; ++k) {
    const auto h = response(static_cast<double>(k) * dw);
    spec[k] *= h;
    spec[n - k] *= std::conj(h);
  }
  if (n % 2 == 0) {
    const auto h = response(static_cast<double>(n / 2) * dw);
    spec[n / 2] *= h.real();
  }

  const auto force = fft::inverse(spec);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = force[i].real();
  return TimeSeries(zeta.t0, zeta.dt, std::move(out));
}

double buoyancy_stiffness(double rho, double g, double r) {
  if (!(rho > 0.0) || !(g > 0.0) || !(r > 0.0)) {
    throw std::invalid_argument("buoyancy_stiffness: inputs must be > 0");
  }
  return rho * g * kPi * r * r;
}

double resonance_frequency(const HydroTable& table) {
  auto reactance = [&](double w) {
    const auto c = interp_coeffs(table, w);
    return w * w * (table.mass + c.added_mass) - table.stiffness;
  };
  double lo = table.omega.front();
  double hi = table.omega.back();
  if (!(reactance(lo) < 0.0 && reactance(hi) > 0.0)) {
    throw std::runtime_error("resonance_frequency: no root inside the grid");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (reactance(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace wec
