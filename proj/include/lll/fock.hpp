#pragma once

#include <Eigen/Dense>
#include <complex>

namespace lll {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

/// Coefficient vector (c_0,...,c_{N-1}) of u = sum c_n phi_n in the
/// special-Hermite basis phi_n(z) = z^n / sqrt(pi n!) * exp(-|z|^2/2).
using FockCoefficients = Vec;

/// Which Sobolev norm family is measured: rho = 1/(2(1-tau)).
struct SobolevScale {
  double tau;
  double s;
  double rho;

  static SobolevScale make(double tau, double s);
};

/// log(n!) via lgamma.
double log_factorial(int n);

/// Eigenvalue of (H+1)^rho on phi_n: (2n+3)^rho.
double htilde_eigenvalue(int n, double rho);

double l2_norm(const FockCoefficients& c);

/// (sum_n (2(n+1))^s |c_n|^2)^{1/2}; the eigenvalues of H are 2(n+1).
double h_sobolev_norm(const FockCoefficients& c, double s);

/// (sum_n (2n+3)^{rho s} |c_n|^2)^{1/2}, eigenvalues of (H+1)^rho.
double htilde_norm(const FockCoefficients& c, const SobolevScale& scale);

/// Exact value of int |z|^{2k} |u|^2 dL for u in the truncated span:
/// sum_n |c_n|^2 (n+k)!/n!, the factorial ratio as a running product.
double radial_moment(const FockCoefficients& c, int k);

/// ||<z>^k u||_{L^2} with <z> = (1+|z|^2)^{1/2}, exact for integer k
/// via the binomial expansion over radial moments.
double bracket_norm(const FockCoefficients& c, int k);

/// Pointwise value sum_n c_n phi_n(z), Gaussian folded into the recurrence.
cplx evaluate(const FockCoefficients& c, cplx z);

/// Relative l2 mass at or above index n0; 0 for the zero vector.
double tail_mass(const FockCoefficients& c, int n0);

}  // namespace lll
