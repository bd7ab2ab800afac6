#include "lll/matrices.hpp"

#include <cmath>
#include <stdexcept>

namespace lll {

double four_wave(int j, int k, int l, int m) {
  if (j < 0 || k < 0 || l < 0 || m < 0) throw std::invalid_argument("negative index");
  if (j + l != k + m) return 0.0;
  const int S = j + l;
  const double lg = log_factorial(S) - (S + 1) * M_LN2 -
                    0.5 * (log_factorial(j) + log_factorial(k) +
                           log_factorial(l) + log_factorial(m));
  return std::exp(lg) / M_PI;
}

Eigen::VectorXd oscillator_eigenvalues(int N) {
  Eigen::VectorXd d(N);
  for (int n = 0; n < N; ++n) d[n] = 2.0 * (n + 1.0);
  return d;
}

Mat potential_matrix(const FockCoefficients& v, int N) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  const int d = static_cast<int>(v.size());
  Mat M = Mat::Zero(N, N);
  for (int m = 0; m < N; ++m)
    for (int n = m; n < N; ++n) {
      // k = j + n - m ranges with j over the support of v
      cplx acc = 0.0;
      for (int j = 0; j < d; ++j) {
        const int k = j + n - m;
        if (k < 0 || k >= d) continue;
        acc += v[j] * std::conj(v[k]) * four_wave(j, k, n, m);
      }
      M(m, n) = acc;
      M(n, m) = std::conj(acc);
    }
  return M;
}

namespace {

// coherent column <phi_m, R_beta phi_0> in log-polar form, safe for large |beta|
cplx coherent_entry(cplx beta, int m) {
  const double ab = std::abs(beta);
  if (ab == 0.0) return m == 0 ? 1.0 : 0.0;
  const double logmag = m * std::log(ab) - 0.5 * ab * ab - 0.5 * log_factorial(m);
  const double ang = m * std::arg(-std::conj(beta));
  return std::exp(logmag) * cplx(std::cos(ang), std::sin(ang));
}

void next_column(cplx beta, const Vec& col_n, int n, Vec& col_np1) {
  const int N = static_cast<int>(col_n.size());
  const double inv = 1.0 / std::sqrt(n + 1.0);
  col_np1[0] = beta * col_n[0] * inv;
  for (int m = 1; m < N; ++m)
    col_np1[m] = (std::sqrt(static_cast<double>(m)) * col_n[m - 1] + beta * col_n[m]) * inv;
}

}  // namespace

Mat displacement_matrix(cplx beta, int N) {
  Mat D(N, N);
  Vec col(N), next(N);
  for (int m = 0; m < N; ++m) col[m] = coherent_entry(beta, m);
  D.col(0) = col;
  for (int n = 0; n + 1 < N; ++n) {
    next_column(beta, col, n, next);
    D.col(n + 1) = next;
    col.swap(next);
  }
  return D;
}

FockCoefficients displacement_apply(cplx beta, const FockCoefficients& v, int N) {
  int support = 0;
  for (int j = 0; j < v.size(); ++j)
    if (v[j] != cplx(0.0)) support = j + 1;
  Vec out = Vec::Zero(N);
  Vec col(N), next(N);
  for (int m = 0; m < N; ++m) col[m] = coherent_entry(beta, m);
  for (int n = 0; n < support; ++n) {
    if (n > 0) {
      next_column(beta, col, n - 1, next);
      col.swap(next);
    }
    if (n < v.size() && v[n] != cplx(0.0)) out += v[n] * col;
  }
  return out;
}

double displacement_tail(cplx beta, int N) {
  const double mu = std::norm(beta);
  if (mu == 0.0) return 0.0;
  double sum = 0.0;
  for (int n = N; n < N + 20000; ++n) {
    const double term = std::exp(n * std::log(mu) - mu - log_factorial(n));
    sum += term;
    if (term < 1e-300 || (sum > 0.0 && term < 1e-18 * sum)) break;
  }
  return sum;
}

Vec rotation_phases(double theta, int N) {
  Vec d(N);
  for (int n = 0; n < N; ++n)
    d[n] = cplx(std::cos(n * theta), std::sin(n * theta));
  return d;
}

Mat conjugated_generator(const FockCoefficients& v, cplx beta, double theta, int N,
                         double tail_tolerance) {
  if (displacement_tail(beta, N) > tail_tolerance)
    throw std::runtime_error("displacement Poisson tail exceeds tolerance at this N");
  Mat M0 = potential_matrix(v, N);
  Mat D = displacement_matrix(beta, N);
  Vec ph = rotation_phases(theta, N);
  Mat T = ph.asDiagonal() * D;
  Mat M = T * M0 * T.adjoint();
  // symmetrize away the last bits of round-off
  return 0.5 * (M + Mat(M.adjoint()));
}

Mat ltilde_matrix(double t, const SobolevScale& scale, const FockCoefficients& v,
                  cplx drift, int N, double tail_tolerance) {
  Mat M = conjugated_generator(v, drift * t, 0.0, N, tail_tolerance);
  Vec ph(N);
  for (int n = 0; n < N; ++n) {
    const double a = -t * htilde_eigenvalue(n, scale.rho);
    ph[n] = cplx(std::cos(a), std::sin(a));
  }
  return ph.asDiagonal() * M * ph.conjugate().asDiagonal();
}

}  // namespace lll
