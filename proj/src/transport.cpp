#include "lll/transport.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lll/analysis.hpp"

namespace lll {

Profile1D Profile1D::gaussian(double max_shift, double h) {
  Profile1D p;
  p.u0 = [](double x) { return std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x); };
  p.L = max_shift + 12.0;  // Gaussian below 1e-14 well inside the margin
  p.G = static_cast<int>(std::ceil(2.0 * p.L / h));
  return p;
}

namespace {

double weighted_part_sq(const Profile1D& p, double shift, double rs) {
  const double h = 2.0 * p.L / p.G;
  double acc = 0.0;
  for (int j = 0; j < p.G; ++j) {
    const double x = -p.L + j * h;
    const double v = p.u0(x - shift);
    acc += std::pow(1.0 + x * x, rs) * v * v;
  }
  return acc * h;
}

// || |xi|^{rs} hat(u0) || by direct DFT of the unshifted samples
double homogeneous_part_sq(const Profile1D& p, double rs) {
  const double h = 2.0 * p.L / p.G;
  std::vector<double> f(p.G);
  for (int j = 0; j < p.G; ++j) f[j] = p.u0(-p.L + j * h);
  double acc = 0.0;
  for (int k = -p.G / 2; k < p.G - p.G / 2; ++k) {
    const double xi = M_PI * k / p.L;
    const cplx step = std::exp(cplx(0.0, -xi * h));
    cplx phase = std::exp(cplx(0.0, xi * p.L));  // e^{-i xi x_0}
    cplx hat = 0.0;
    for (int j = 0; j < p.G; ++j) {
      hat += f[j] * phase;
      phase *= step;
    }
    hat *= h;
    acc += std::pow(std::abs(xi), 2.0 * rs) * std::norm(hat);
  }
  return acc / (2.0 * p.L);
}

}  // namespace

std::pair<double, double> transport_norm_parts(const Profile1D& p, double t,
                                               const SobolevScale& scale, double eps) {
  const double rs = scale.rho * scale.s;
  const double shift = eps * t;
  if (std::abs(shift) + 10.0 > p.L)
    throw std::runtime_error("shift exceeds the grid domain");
  return {std::sqrt(weighted_part_sq(p, shift, rs)),
          std::sqrt(homogeneous_part_sq(p, rs))};
}

double transport_norm(const Profile1D& p, double t, const SobolevScale& scale,
                      double eps) {
  auto [wpart, hpart] = transport_norm_parts(p, t, scale, eps);
  return wpart + hpart;
}

TransportGrowth transport_growth_check(const Profile1D& p, const SobolevScale& scale,
                                       double eps, const std::vector<double>& times,
                                       double fit_t_min, double fit_t_max) {
  const double rs = scale.rho * scale.s;
  const double hom = std::sqrt(homogeneous_part_sq(p, rs));
  const double norm0 = std::sqrt(weighted_part_sq(p, 0.0, rs)) + hom;

  std::vector<double> value;
  value.reserve(times.size());
  TransportGrowth out{};
  out.c_lower = std::numeric_limits<double>::infinity();
  out.c_upper = 0.0;
  for (double t : times) {
    const double v = std::sqrt(weighted_part_sq(p, eps * t, rs)) + hom;
    value.push_back(v);
    const double envelope = std::pow(1.0 + eps * t * eps * t, 0.5 * rs) * norm0;
    const double ratio = v / envelope;
    out.c_lower = std::min(out.c_lower, ratio);
    out.c_upper = std::max(out.c_upper, ratio);
  }
  SlopeFit fit = fit_slope(times, value, fit_t_min, fit_t_max);
  out.slope = fit.slope;
  out.slope_err = fit.slope_err;
  out.bounds_pass = std::isfinite(out.c_upper) && out.c_lower > 0.0;
  return out;
}

}  // namespace lll
