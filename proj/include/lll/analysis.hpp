#pragma once

#include <utility>
#include <vector>

#include "lll/exact.hpp"
#include "lll/series.hpp"

namespace lll {

struct SlopeFit {
  double slope;
  double slope_err;
  int samples;
};

/// Ordinary least squares of log(value) against log(t) over the window.
SlopeFit fit_slope(const std::vector<double>& t, const std::vector<double>& value,
                   double t_min, double t_max);

struct BoundCheck {
  double sup_ratio;
  double argmax_t;
};

/// sup_t value(t) / (value(0) * <C0 t>^s), the polynomial envelope check.
BoundCheck check_upper_bound(const std::vector<double>& t,
                             const std::vector<double>& value, double s, double C0);

/// Max l2 distance between simulated states and the closed-form solution,
/// global phase included.
double compare_to_oracle(const std::vector<std::pair<double, FockCoefficients>>& states,
                         const TravelingWaveOracle& oracle);

/// Spectral norm of Lambda^{a} A Lambda^{-b} with Lambda = diag((2n+3)^rho),
/// by power iteration on the normal matrix (tol 1e-8, <= 1e4 iterations).
double weighted_spectral_norm(const Mat& A, double rho, double out_exp, double in_exp);

/// Spectral norm in the Htilde^s metric: a = b = s/2.
double operator_norm_hts(const Mat& A, double rho, double s);

struct OperatorDiagnostics {
  double norm_L_0, norm_L_1, norm_L_2;
  double comm_norm;  // ||[Lambda, L] Lambda^{-tau}||
};

/// Finite-truncation boundedness diagnostics of the phase-twisted
/// generator built from V-coefficients v and drift rate.
OperatorDiagnostics operator_norm_diagnostics(const FockCoefficients& v, double t,
                                              const SobolevScale& scale, cplx drift,
                                              int N);

}  // namespace lll
