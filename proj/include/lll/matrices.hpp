#pragma once

#include "lll/fock.hpp"

namespace lll {

/// Coefficient int phi_j conj(phi_k) phi_l conj(phi_m) dL:
/// 0 unless j+l == k+m, else (j+l)! / (2^{j+l+1} pi sqrt(j!k!l!m!)).
double four_wave(int j, int k, int l, int m);

/// Eigenvalues of H on the truncated basis, 2(n+1).
Eigen::VectorXd oscillator_eigenvalues(int N);

/// Matrix of u -> Pi(|V|^2 u): M(m,n) = <phi_m, Pi(|V|^2 phi_n)> with
/// V = sum v_j phi_j. Hermitian, banded when V has finite degree.
Mat potential_matrix(const FockCoefficients& v, int N);

/// Matrix of the magnetic translation R_beta: u(z) -> u(z+beta) e^{(conj(z)beta - z conj(beta))/2},
/// D(m,n) = <phi_m, R_beta phi_n>. Column 0 is the coherent seed
/// (-conj(beta))^m e^{-|beta|^2/2}/sqrt(m!); later columns follow the
/// recurrence D(m,n+1) = (sqrt(m) D(m-1,n) + beta D(m,n)) / sqrt(n+1).
Mat displacement_matrix(cplx beta, int N);

/// R_beta applied to a coefficient vector; builds only the columns the
/// support of v requires, O(N * support).
FockCoefficients displacement_apply(cplx beta, const FockCoefficients& v, int N);

/// Relative Poisson mass of the coherent column beyond index N,
/// e^{-|beta|^2} sum_{n>=N} |beta|^{2n}/n!.
double displacement_tail(cplx beta, int N);

/// Diagonal of L_theta: phi_n -> e^{i n theta} phi_n.
Vec rotation_phases(double theta, int N);

/// Matrix of u -> Pi(|L_theta R_beta V|^2 u), assembled by conjugation
/// T M T^dagger with T = diag(e^{i n theta}) * D(beta).
Mat conjugated_generator(const FockCoefficients& v, cplx beta, double theta, int N,
                         double tail_tolerance = 1e-6);

/// Matrix of u -> e^{-it(H+1)^rho} Pi(W0(t) e^{it(H+1)^rho} u) with
/// W0(t) = |R_{alpha t} V|^2: phase-twisted conjugated generator.
Mat ltilde_matrix(double t, const SobolevScale& scale, const FockCoefficients& v,
                  cplx drift, int N, double tail_tolerance = 1e-6);

}  // namespace lll
