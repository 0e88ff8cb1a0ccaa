#pragma once

#include <span>
#include <string>

#include "wec/timeseries.hpp"

namespace wec {

enum class EstimatorMethod { ekf, fll, hht };

EstimatorMethod estimator_from_name(const std::string& name);
std::string estimator_name(EstimatorMethod m);

/// Peak frequency of a coarse rectangular periodogram over the first
/// n_samples samples (mean removed), restricted to [w_min, w_max]. Used to
/// seed the recursive estimators.
double coarse_peak_frequency(std::span<const double> x, double dt, double w_min, double w_max,
                             std::size_t n_samples = 128);

}  // namespace wec
