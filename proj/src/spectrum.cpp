#include "wec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "wec/constants.hpp"
#include "wec/timeseries.hpp"

namespace wec {

namespace {

void validate(const std::vector<double>& omega, const std::vector<double>& density) {
  if (omega.size() != density.size()) {
    throw std::invalid_argument("invalid spectrum: grid/density size mismatch");
  }
  if (omega.size() < 2) {
    throw std::invalid_argument("invalid spectrum: need at least 2 grid points");
  }
  if (!(omega.front() > 0.0)) {
    throw std::invalid_argument("invalid spectrum: grid must start above 0");
  }
  for (std::size_t i = 0; i + 1 < omega.size(); ++i) {
    if (!(omega[i + 1] > omega[i])) {
      throw std::invalid_argument("invalid spectrum: grid not strictly ascending");
    }
  }
  for (double s : density) {
    if (!(s >= 0.0) || !std::isfinite(s)) {
      throw std::invalid_argument("invalid spectrum: density must be finite and >= 0");
    }
  }
}

}  // namespace

Spectrum::Spectrum(std::vector<double> w, std::vector<double> s)
    : omega(std::move(w)), density(std::move(s)) {
  validate(omega, density);
}

double spectral_moment(const Spectrum& s, int n) {
  if (n < -1 || n > 1) throw std::invalid_argument("spectral_moment: order must be -1, 0 or 1");
  if (s.omega.size() < 2) throw std::invalid_argument("invalid spectrum: empty grid");
  std::vector<double> integrand(s.omega.size());
  for (std::size_t i = 0; i < s.omega.size(); ++i) {
    integrand[i] = std::pow(s.omega[i], n) * s.density[i];
  }
  return trapz(s.omega, integrand);
}

SpectralStats spectral_stats(const Spectrum& s) {
  SpectralStats st;
  st.m_neg1 = spectral_moment(s, -1);
  st.m0 = spectral_moment(s, 0);
  st.m1 = spectral_moment(s, 1);
  if (!(st.m0 > 0.0)) throw std::runtime_error("degenerate spectrum: zero variance");
  st.hs = 4.0 * std::sqrt(st.m0);
  st.omega_e = st.m0 / st.m_neg1;
  st.omega_1 = st.m1 / st.m0;
  const auto imax = std::distance(s.density.begin(),
                                  std::max_element(s.density.begin(), s.density.end()));
  st.omega_p = s.omega[static_cast<std::size_t>(imax)];
  return st;
}

namespace {

constexpr double kGridStep = 0.01;
constexpr double kGridMax = 4.0;

double bretschneider_density(double w, double hs, double wp) {
  const double wp4 = wp * wp * wp * wp;
  const double w4 = w * w * w * w;
  const double expo = -1.25 * wp4 / w4;
  if (expo < -700.0) return 0.0;
  return (5.0 / 16.0) * hs * hs * wp4 / (w4 * w) * std::exp(expo);
}

std::vector<double> default_grid() {
  const auto n = static_cast<std::size_t>(std::lround(kGridMax / kGridStep));
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = kGridStep * static_cast<double>(i + 1);
  return w;
}

}  // namespace

Spectrum bretschneider_spectrum(double hs, double omega_p) {
  if (!(hs > 0.0) || !(omega_p > 0.0)) {
    throw std::invalid_argument("bretschneider_spectrum: hs and omega_p must be > 0");
  }
  auto w = default_grid();
  std::vector<double> s(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) s[i] = bretschneider_density(w[i], hs, omega_p);
  return Spectrum(std::move(w), std::move(s));
}

Spectrum two_peak_spectrum(double hs_swell, double omega_p_swell,
                           double hs_wind, double omega_p_wind) {
  auto swell = bretschneider_spectrum(hs_swell, omega_p_swell);
  const auto wind = bretschneider_spectrum(hs_wind, omega_p_wind);
  for (std::size_t i = 0; i < swell.density.size(); ++i) swell.density[i] += wind.density[i];
  return swell;
}

double wave_power_flux(const Spectrum& s) {
  std::vector<double> integrand(s.omega.size());
  for (std::size_t i = 0; i < s.omega.size(); ++i) integrand[i] = s.density[i] / s.omega[i];
  const double rho_g_half = 0.5 * constants::kSeaWaterDensity * constants::kGravity;
  return rho_g_half * trapz(s.omega, integrand);
}

}  // namespace wec
