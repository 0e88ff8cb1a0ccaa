#pragma once

namespace wec::constants {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSeaWaterDensity = 1025.0;  // kg/m^3
inline constexpr double kGravity = 9.81;            // m/s^2

// Frequency window for all estimators and tuning laws, rad/s. Covers the
// hydrodynamic grid and keeps the estimators away from the omega = 0
// singularity of the tuning laws.
inline constexpr double kOmegaMin = 0.1;
inline constexpr double kOmegaMax = 3.0;

}  // namespace wec::constants
