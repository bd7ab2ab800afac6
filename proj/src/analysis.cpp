#include "lll/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "lll/matrices.hpp"

namespace lll {

SlopeFit fit_slope(const std::vector<double>& t, const std::vector<double>& value,
                   double t_min, double t_max) {
  if (t.size() != value.size()) throw std::invalid_argument("column size mismatch");
  std::vector<double> x, y;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < t_min || t[i] > t_max) continue;
    if (t[i] <= 0.0 || value[i] <= 0.0)
      throw std::invalid_argument("nonpositive value in fit window");
    x.push_back(std::log(t[i]));
    y.push_back(std::log(value[i]));
  }
  const int n = static_cast<int>(x.size());
  if (n < 10) throw std::invalid_argument("fewer than 10 samples in fit window");

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    sx += x[i]; sy += y[i]; sxx += x[i] * x[i]; sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  const double slope = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / n;
  double ss = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = y[i] - slope * x[i] - intercept;
    ss += r * r;
  }
  const double sigma2 = n > 2 ? ss / (n - 2) : 0.0;
  return SlopeFit{slope, std::sqrt(sigma2 * n / denom), n};
}

BoundCheck check_upper_bound(const std::vector<double>& t,
                             const std::vector<double>& value, double s, double C0) {
  if (t.empty() || t.size() != value.size()) throw std::invalid_argument("bad series");
  const double v0 = value.front();
  if (v0 <= 0.0) throw std::invalid_argument("value(0) must be positive");
  BoundCheck out{0.0, 0.0};
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double envelope = v0 * std::pow(1.0 + C0 * t[i] * C0 * t[i], 0.5 * s);
    const double ratio = value[i] / envelope;
    if (ratio > out.sup_ratio) { out.sup_ratio = ratio; out.argmax_t = t[i]; }
  }
  return out;
}

double compare_to_oracle(const std::vector<std::pair<double, FockCoefficients>>& states,
                         const TravelingWaveOracle& oracle) {
  double worst = 0.0;
  for (const auto& [t, c] : states) {
    const int N = std::max(static_cast<int>(c.size()), oracle_truncation(oracle, t));
    Vec ref = oracle_coeffs(oracle, t, N);
    Vec diff = ref;
    diff.head(c.size()) -= c;
    worst = std::max(worst, diff.norm());
  }
  return worst;
}

double weighted_spectral_norm(const Mat& A, double rho, double out_exp, double in_exp) {
  const int N = static_cast<int>(A.rows());
  Eigen::VectorXd wo(N), wi(N);
  for (int n = 0; n < N; ++n) {
    const double lam = htilde_eigenvalue(n, rho);
    wo[n] = std::pow(lam, out_exp);
    wi[n] = std::pow(lam, -in_exp);
  }
  Mat B = wo.asDiagonal() * A * wi.asDiagonal();
  if (B.cwiseAbs().maxCoeff() == 0.0) return 0.0;

  // power iteration on B^H B
  Vec x = Vec::Ones(N) / std::sqrt(static_cast<double>(N));
  for (int n = 0; n < N; ++n) x[n] *= cplx(std::cos(0.7 * n), std::sin(1.3 * n));
  x.normalize();
  double prev = 0.0;
  for (int it = 0; it < 10000; ++it) {
    Vec y = B.adjoint() * (B * x);
    const double norm = y.norm();
    if (norm == 0.0) return 0.0;
    x = y / norm;
    if (it % 4 == 3) {
      const double est = std::sqrt(norm);
      if (std::abs(est - prev) <= 1e-8 * std::max(est, 1.0)) return est;
      prev = est;
    }
  }
  return prev;
}

double operator_norm_hts(const Mat& A, double rho, double s) {
  return weighted_spectral_norm(A, rho, 0.5 * s, 0.5 * s);
}

OperatorDiagnostics operator_norm_diagnostics(const FockCoefficients& v, double t,
                                              const SobolevScale& scale, cplx drift,
                                              int N) {
  Mat L = ltilde_matrix(t, scale, v, drift, N);
  OperatorDiagnostics d{};
  d.norm_L_0 = operator_norm_hts(L, scale.rho, 0.0);
  d.norm_L_1 = operator_norm_hts(L, scale.rho, 1.0);
  d.norm_L_2 = operator_norm_hts(L, scale.rho, 2.0);

  Eigen::VectorXd lam(N);
  for (int n = 0; n < N; ++n) lam[n] = htilde_eigenvalue(n, scale.rho);
  Mat comm = lam.asDiagonal() * L - L * lam.asDiagonal();
  Eigen::VectorXd lam_tau = lam.array().pow(-scale.tau).matrix();
  Mat scaled = comm * lam_tau.asDiagonal();
  d.comm_norm = weighted_spectral_norm(scaled, scale.rho, 0.0, 0.0);
  return d;
}

}  // namespace lll
