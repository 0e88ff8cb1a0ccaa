#include "wec/est_ekf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wec/estimators.hpp"

namespace wec {

namespace {

using Mat3 = std::array<double, 9>;

Mat3 matmul(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a[3 * i + k] * b[3 * k + j];
      c[3 * i + j] = s;
    }
  }
  return c;
}

Mat3 transpose(const Mat3& a) {
  return {a[0], a[3], a[6], a[1], a[4], a[7], a[2], a[5], a[8]};
}

}  // namespace

EkfState ekf_init(const TimeSeries& fe, const EkfConfig& cfg) {
  EkfState st;
  st.ts = fe.dt;
  st.omega_min = cfg.omega_min;
  st.omega_max = cfg.omega_max;
  st.r = cfg.r > 0.0 ? cfg.r : 0.01 * std::max(variance(fe.values), 1e-12);
  st.q_psi = cfg.q_psi >= 0.0 ? cfg.q_psi : 1e-4 * st.r;
  st.q_omega = cfg.q_omega;

  st.x = {fe.values.front(), 0.0,
          coarse_peak_frequency(fe.values, fe.dt, cfg.omega_min, cfg.omega_max)};
  st.p = {st.r, 0, 0, 0, st.r, 0, 0, 0, 0.25};
  return st;
}

EkfStepResult ekf_step(EkfState& st, double fe_k) {
  const double psi = st.x[0];
  const double psis = st.x[1];
  const double w = st.x[2];
  const double theta = w * st.ts;
  const double c = std::cos(theta);
  const double s = std::sin(theta);

  // Prediction: rotate the phasor by w*Ts, frequency is a random walk.
  std::array<double, 3> xp = {c * psi + s * psis, -s * psi + c * psis, w};
  const Mat3 jf = {c,  s,  st.ts * (-s * psi + c * psis),
                   -s, c,  st.ts * (-c * psi - s * psis),
                   0,  0,  1};
  Mat3 pp = matmul(matmul(jf, st.p), transpose(jf));
  pp[0] += st.q_psi;
  pp[4] += st.q_psi;
  pp[8] += st.q_omega;

  // Innovation on the scalar measurement h(x) = psi.
  const double s_cov = pp[0] + st.r;
  if (std::isfinite(s_cov) && s_cov > 0.0 && std::isfinite(fe_k)) {
    const double innov = fe_k - xp[0];
    const std::array<double, 3> k = {pp[0] / s_cov, pp[3] / s_cov, pp[6] / s_cov};
    for (int i = 0; i < 3; ++i) xp[i] += k[i] * innov;
    Mat3 pu;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) pu[3 * i + j] = pp[3 * i + j] - k[i] * pp[j];
    }
    pp = pu;
  }
  // else: degenerate innovation covariance or bad sample, keep the prior.

  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const double sym = 0.5 * (pp[3 * i + j] + pp[3 * j + i]);
      pp[3 * i + j] = sym;
      pp[3 * j + i] = sym;
    }
  }

  xp[2] = std::clamp(xp[2], st.omega_min, st.omega_max);
  st.x = xp;
  st.p = pp;
  return {st.x[2], std::hypot(st.x[0], st.x[1])};
}

TimeSeries ekf_run(const TimeSeries& fe, const EkfConfig& cfg) {
  EkfState st = ekf_init(fe, cfg);
  std::vector<double> omega(fe.size());
  omega[0] = st.x[2];
  for (std::size_t k = 1; k < fe.size(); ++k) {
    omega[k] = ekf_step(st, fe.values[k]).omega_hat;
  }
  return TimeSeries(fe.t0, fe.dt, std::move(omega));
}

}  // namespace wec
