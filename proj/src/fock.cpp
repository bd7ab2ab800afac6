#include "lll/fock.hpp"

#include <cmath>
#include <stdexcept>

namespace lll {

SobolevScale SobolevScale::make(double tau, double s) {
  if (tau < 0.0 || tau >= 1.0) throw std::invalid_argument("tau must be in [0,1)");
  if (s < 0.0) throw std::invalid_argument("s must be >= 0");
  return SobolevScale{tau, s, 1.0 / (2.0 * (1.0 - tau))};
}

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

double htilde_eigenvalue(int n, double rho) {
  return std::pow(2.0 * n + 3.0, rho);
}

double l2_norm(const FockCoefficients& c) { return c.norm(); }

double h_sobolev_norm(const FockCoefficients& c, double s) {
  double acc = 0.0;
  for (int n = 0; n < c.size(); ++n)
    acc += std::pow(2.0 * (n + 1.0), s) * std::norm(c[n]);
  return std::sqrt(acc);
}

double htilde_norm(const FockCoefficients& c, const SobolevScale& scale) {
  double acc = 0.0;
  for (int n = 0; n < c.size(); ++n)
    acc += std::pow(htilde_eigenvalue(n, scale.rho), scale.s) * std::norm(c[n]);
  return std::sqrt(acc);
}

double radial_moment(const FockCoefficients& c, int k) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  double acc = 0.0;
  for (int n = 0; n < c.size(); ++n) {
    double ratio = 1.0;  // (n+k)!/n!, never materialize factorials
    for (int i = 1; i <= k; ++i) ratio *= n + i;
    acc += std::norm(c[n]) * ratio;
  }
  return acc;
}

double bracket_norm(const FockCoefficients& c, int k) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  double acc = 0.0;
  double binom = 1.0;
  for (int j = 0; j <= k; ++j) {
    acc += binom * radial_moment(c, j);
    binom *= static_cast<double>(k - j) / (j + 1.0);
  }
  return std::sqrt(acc);
}

cplx evaluate(const FockCoefficients& c, cplx z) {
  // phi_0 = exp(-|z|^2/2)/sqrt(pi), phi_{n+1} = z phi_n / sqrt(n+1)
  cplx phi = std::exp(-0.5 * std::norm(z)) / std::sqrt(M_PI);
  cplx acc = 0.0;
  for (int n = 0; n < c.size(); ++n) {
    acc += c[n] * phi;
    phi *= z / std::sqrt(n + 1.0);
  }
  return acc;
}

double tail_mass(const FockCoefficients& c, int n0) {
  if (n0 < 0 || n0 > c.size()) throw std::invalid_argument("n0 out of range");
  double total = c.squaredNorm();
  if (total == 0.0) return 0.0;
  double tail = c.tail(c.size() - n0).squaredNorm();
  return tail / total;
}

}  // namespace lll
