#pragma once

#include <vector>

namespace wec {

/// One-sided spectral density on an ascending frequency grid (rad/s).
/// Density units are m^2*s/rad for wave spectra, N^2*s/rad for force spectra.
struct Spectrum {
  std::vector<double> omega;
  std::vector<double> density;

  Spectrum() = default;
  Spectrum(std::vector<double> w, std::vector<double> s);
};

struct SpectralStats {
  double hs = 0.0;       // significant wave height, 4*sqrt(m0)
  double omega_p = 0.0;  // grid frequency of the density maximum
  double omega_e = 0.0;  // energy frequency, m0/m_{-1}
  double omega_1 = 0.0;  // mean centroid frequency, m1/m0
  double m_neg1 = 0.0;
  double m0 = 0.0;
  double m1 = 0.0;
};

/// Spectral moment of order n (n in {-1, 0, 1}) by trapezoidal quadrature.
double spectral_moment(const Spectrum& s, int n);

/// Summary statistics of a spectrum. Throws if m0 == 0.
SpectralStats spectral_stats(const Spectrum& s);

/// Bretschneider (two-parameter Pierson-Moskowitz) spectrum sampled on the
/// default grid: S(w) = (5/16) Hs^2 wp^4 / w^5 * exp(-5 wp^4 / (4 w^4)).
Spectrum bretschneider_spectrum(double hs, double omega_p);

/// Swell + wind-sea superposition of two Bretschneider shapes.
Spectrum two_peak_spectrum(double hs_swell, double omega_p_swell,
                           double hs_wind, double omega_p_wind);

/// Transported wave power per unit crest width: (rho*g/2) * integral S(w)/w dw.
double wave_power_flux(const Spectrum& s);

}  // namespace wec
