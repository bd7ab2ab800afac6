#pragma once

#include <functional>
#include <vector>

#include "lll/fock.hpp"

namespace lll {

/// 1D profile for the free-transport example; the mixed norm of the
/// translate u0(. - eps t) is measured on a uniform grid over [-L, L].
struct Profile1D {
  std::function<double(double)> u0;  // real profile
  double L;
  int G;  // grid points, spacing h = 2L/G

  /// Standard Gaussian pi^{-1/4} e^{-x^2/2} on a grid wide enough for
  /// shifts up to max_shift.
  static Profile1D gaussian(double max_shift, double h = 0.05);
};

/// ||<x>^{rho s} u(t)||_{L2} + ||(-d_x^2)^{rho s/2} u(t)||_{L2} for
/// u(t) = u0(. - eps t); the homogeneous part is shift invariant and
/// computed spectrally from the t = 0 samples.
double transport_norm(const Profile1D& p, double t, const SobolevScale& scale,
                      double eps);

/// Weighted and homogeneous parts separately (the latter t-independent).
std::pair<double, double> transport_norm_parts(const Profile1D& p, double t,
                                               const SobolevScale& scale, double eps);

struct TransportGrowth {
  double slope;
  double slope_err;
  double c_lower;   // min over window of norm / (<eps t>^{rho s} ||u0||)
  double c_upper;   // max of the same ratio
  bool bounds_pass; // both constants finite and positive
};

TransportGrowth transport_growth_check(const Profile1D& p, const SobolevScale& scale,
                                       double eps, const std::vector<double>& times,
                                       double fit_t_min, double fit_t_max);

}  // namespace lll
