#include "wec/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace wec::fft {

namespace {

// FFTW planning is not thread-safe; execution is.
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

std::vector<std::complex<double>> transform(std::span<const std::complex<double>> x, int sign) {
  if (x.empty()) throw std::invalid_argument("fft: empty input");
  const auto n = x.size();
  std::vector<std::complex<double>> out(n);
  std::vector<std::complex<double>> in(x.begin(), x.end());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(n),
                            reinterpret_cast<fftw_complex*>(in.data()),
                            reinterpret_cast<fftw_complex*>(out.data()),
                            sign, FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw std::runtime_error("fft: planning failed");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

}  // namespace

std::vector<std::complex<double>> forward(std::span<const std::complex<double>> x) {
  return transform(x, FFTW_FORWARD);
}

std::vector<std::complex<double>> forward(std::span<const double> x) {
  std::vector<std::complex<double>> cx(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) cx[i] = x[i];
  return transform(cx, FFTW_FORWARD);
}

std::vector<std::complex<double>> inverse(std::span<const std::complex<double>> x) {
  auto out = transform(x, FFTW_BACKWARD);
  const double inv_n = 1.0 / static_cast<double>(x.size());
  for (auto& c : out) c *= inv_n;
  return out;
}

}  // namespace wec::fft
