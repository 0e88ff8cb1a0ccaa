#pragma once

#include <filesystem>
#include <vector>

#include "wec/timeseries.hpp"

namespace wec {

/// Frequency-gridded hydrodynamic coefficients of the heaving body, plus its
/// rigid-body constants. Immutable after load.
struct HydroTable {
  std::vector<double> omega;             // rad/s, ascending
  std::vector<double> added_mass;        // m_r(w), kg
  std::vector<double> radiation_damping; // B_r(w), N*s/m
  std::vector<double> excitation_gain;   // |H_e(w)|, N/m
  std::vector<double> excitation_phase;  // arg H_e(w), rad
  double m_inf = 0.0;                    // infinite-frequency added mass, kg
  double mass = 0.0;                     // body mass, kg
  double stiffness = 0.0;                // buoyancy stiffness, N/m
  double radius = 0.0;                   // cylinder radius, m
};

struct HydroCoeffs {
  double added_mass;
  double radiation_damping;
  double excitation_gain;
  double excitation_phase;
};

/// Radiation impulse response h_r sampled at spacing dt, truncated where the
/// 1%-of-peak decay criterion first holds.
struct RadiationKernel {
  double dt = 0.0;
  std::vector<double> taps;   // N/m
  double memory_length = 0.0; // s, taps.size() == memory_length/dt + 1
};

/// Loads and validates the hydro table JSON.
HydroTable load_hydro_table(const std::filesystem::path& path);

/// Piecewise-linear interpolation of the coefficient curves at w > 0. Outside
/// the grid the curves clamp to their end values, except B_r which drops to 0
/// and m_r which holds m_inf above the grid.
HydroCoeffs interp_coeffs(const HydroTable& table, double w);

/// h_r(t) = (2/pi) * integral B_r(w) cos(w t) dw, evaluated in closed form on
/// the piecewise-linear table. Throws if the kernel has not decayed to 1% of
/// its peak within 60 s.
RadiationKernel radiation_kernel(const HydroTable& table, double dt);

/// Excitation force from a wave elevation record: frequency-domain
/// application of H_e(w) over the full record.
TimeSeries excitation_force(const HydroTable& table, const TimeSeries& zeta);

/// Buoyancy stiffness of a surface-piercing vertical cylinder, rho*g*pi*r^2.
double buoyancy_stiffness(double rho, double g, double r);

/// The root of w^2 (m + m_r(w)) = S inside the table grid.
double resonance_frequency(const HydroTable& table);

}  // namespace wec
