#include "lll/exact.hpp"

#include <cmath>
#include <stdexcept>

#include "lll/matrices.hpp"

namespace lll {

TravelingWaveOracle TravelingWaveOracle::make(double epsilon, double delta) {
  if (epsilon <= 0.0) throw std::invalid_argument("epsilon must be > 0");
  TravelingWaveOracle o;
  o.epsilon = epsilon;
  o.delta = delta;
  o.lambda = 7.0 * epsilon / (32.0 * M_PI);
  o.mu = -o.lambda;
  o.alpha = std::sqrt(3.0) * epsilon / (32.0 * M_PI);
  return o;
}

FockCoefficients TravelingWaveOracle::initial_coeffs() const {
  Vec u(2);
  u[0] = 0.5 * std::sqrt(epsilon);
  u[1] = cplx(0.0, 0.5 * std::sqrt(3.0 * epsilon));
  return u;
}

int oracle_truncation(const TravelingWaveOracle& oracle, double t) {
  const double m = oracle.alpha * t * oracle.alpha * t;
  return static_cast<int>(std::ceil(m + 10.0 * std::sqrt(m + 1.0) + 32.0));
}

FockCoefficients oracle_coeffs(const TravelingWaveOracle& oracle, double t, int N) {
  if (displacement_tail(oracle.alpha * t, N) > 1e-9)
    throw std::runtime_error("oracle truncation too small for this time");
  Vec c = displacement_apply(oracle.alpha * t, oracle.initial_coeffs(), N);
  c = Vec(rotation_phases(-2.0 * oracle.delta * t, N).asDiagonal() * c);
  const double ph = -(oracle.lambda + 2.0 * oracle.delta) * t;
  return std::exp(cplx(0.0, ph)) * c;
}

double oracle_moment1(const TravelingWaveOracle& oracle, double t) {
  const double at = oracle.alpha * t;
  return oracle.epsilon * (7.0 / 4.0 + at * at);
}

NormSeries oracle_norm_series(const TravelingWaveOracle& oracle,
                              const std::vector<double>& times,
                              const SobolevScale& scale,
                              const std::vector<int>& k_list,
                              const std::vector<double>& s_list) {
  NormSeries series;
  series.init(k_list, s_list);
  for (double t : times) {
    const int N = oracle_truncation(oracle, t);
    Vec c = oracle_coeffs(oracle, t, N);
    series.record(t, c, N - (N + 7) / 8, scale);
  }
  return series;
}

}  // namespace lll
