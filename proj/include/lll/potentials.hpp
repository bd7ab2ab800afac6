#pragma once

#include <functional>

#include "lll/fock.hpp"

namespace lll {

enum class PotentialKind { TravelingWave, GaussianDecay, StaticFock, Custom };

/// Description of the real-valued potential W(t,z).
///  - TravelingWave: W = |L_{-2 delta t} R_{alpha t} V|^2 with
///    V = sqrt(eps)(phi_0/2 - i sqrt(3)/2 phi_1), alpha = sqrt(3) eps/(32 pi).
///  - GaussianDecay: W = eps (1+cos t)/2 e^{-|z|^2}, spatially decaying.
///  - StaticFock: W = |V|^2 for a fixed coefficient vector V.
///  - Custom: arbitrary sampler, matrix elements only through quadrature.
struct PotentialSpec {
  PotentialKind kind = PotentialKind::TravelingWave;
  double epsilon = 1.0;
  double delta = 0.0;
  FockCoefficients static_coeffs;               // StaticFock
  std::function<double(double, cplx)> sampler;  // Custom

  static PotentialSpec traveling_wave(double epsilon, double delta = 0.0);
  static PotentialSpec gaussian_decay(double epsilon);
  static PotentialSpec static_fock(FockCoefficients v);
  static PotentialSpec custom(std::function<double(double, cplx)> sampler);

  /// drift alpha = sqrt(3) eps / (32 pi) of the traveling wave
  double drift() const;

  /// Coefficients of V at t = 0 (TravelingWave and StaticFock kinds).
  FockCoefficients base_coeffs() const;

  /// Pointwise W(t,z) for any kind.
  double value(double t, cplx z) const;

  /// Center of mass of the potential at time t (where the sup lives).
  cplx center(double t) const;
};

/// Closed form of the traveling-wave potential,
/// (eps/4pi) |1 - i sqrt(3)(e^{-2 i delta t} z + alpha t)|^2 e^{-|e^{-2 i delta t} z + alpha t|^2}.
double traveling_wave_value(const PotentialSpec& spec, double t, cplx z);

/// Coefficient vector of V_t = L_{-2 delta t} R_{alpha t} V.
FockCoefficients potential_coeffs(const PotentialSpec& spec, double t, int N);

double gaussian_decay_value(const PotentialSpec& spec, double t, cplx z);

/// Analytic d_z^j W for the traveling wave, j <= 2 (moment-identity oracle).
cplx traveling_wave_dz(const PotentialSpec& spec, double t, cplx z, int j);

/// Grid maximum of |d_zbar^j d_z^k W(t,.)| by finite differences, on a
/// box that follows the potential's center.
double derivative_sup_estimate(const PotentialSpec& spec, double t, int j, int k);

}  // namespace lll
