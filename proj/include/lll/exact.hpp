#pragma once

#include "lll/series.hpp"

namespace lll {

/// Closed-form traveling-wave solution u(t) = e^{-i(lambda+2delta)t} L_{-2 delta t} R_{alpha t} U
/// with U = sqrt(eps)(phi_0/2 + i sqrt(3)/2 phi_1), available at any time
/// without time stepping.
struct TravelingWaveOracle {
  double epsilon;
  double delta;
  double lambda;  //  7 eps / (32 pi)
  double mu;      // -7 eps / (32 pi)
  double alpha;   // sqrt(3) eps / (32 pi)

  static TravelingWaveOracle make(double epsilon, double delta = 0.0);

  FockCoefficients initial_coeffs() const;
};

/// Truncation size keeping the Poisson tail of alpha*t below ~1e-12.
int oracle_truncation(const TravelingWaveOracle& oracle, double t);

FockCoefficients oracle_coeffs(const TravelingWaveOracle& oracle, double t, int N);

/// Closed form of int |z|^2 |u(t)|^2 dL = eps (7/4 + alpha^2 t^2).
double oracle_moment1(const TravelingWaveOracle& oracle, double t);

/// Norm series sampled from the closed form with adaptive truncation.
NormSeries oracle_norm_series(const TravelingWaveOracle& oracle,
                              const std::vector<double>& times,
                              const SobolevScale& scale,
                              const std::vector<int>& k_list,
                              const std::vector<double>& s_list);

}  // namespace lll
