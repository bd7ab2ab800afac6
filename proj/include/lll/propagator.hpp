#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "lll/potentials.hpp"
#include "lll/series.hpp"

namespace lll {

/// Which form of the equation is integrated:
///   Full    : i u' = delta H u + Pi(W(t) u), W(t) = |L_{-2 delta t} R_{alpha t} V|^2
///   Reduced : i v' = Pi(W0(t) v),            W0(t) = |R_{alpha t} V|^2
///   Tilde   : i y' = Ltilde(t) y             (phase-twisted generator)
enum class Gauge { Full, Reduced, Tilde };

struct SimulationConfig {
  PotentialSpec potential;
  Gauge gauge = Gauge::Reduced;
  SobolevScale scale = SobolevScale::make(0.0, 1.0);
  int N = 64;
  double dt = 1e-2;
  double t_max = 1.0;
  int record_every = 10;
  double tail_tolerance = 1e-6;
  std::vector<int> moment_orders = {1};
  std::vector<double> s_list = {1.0};
  bool keep_states = false;
};

struct EvolveResult {
  NormSeries series;
  FockCoefficients final_state;
  std::vector<std::pair<double, FockCoefficients>> states;  // if keep_states
  bool tail_abort = false;
  double final_time = 0.0;
};

/// One implicit-midpoint (Cayley) step with the generator frozen at the
/// half step: c' = (I + i dt/2 A)^{-1} (I - i dt/2 A) c. Exactly norm
/// preserving for Hermitian A; second order in dt.
FockCoefficients step_unitary(const FockCoefficients& c, double t, double dt,
                              const std::function<Mat(double)>& generator);

EvolveResult evolve(const SimulationConfig& config, const FockCoefficients& c0);

enum class PhaseMode { DeltaH, DeltaHInverse, HTilde, HTildeInverse };

/// Diagonal phase change: multiplies c_n by e^{+-2 i delta (n+1) t}
/// (DeltaH modes, param = delta) or e^{+-i t (2n+3)^rho} (HTilde modes,
/// param = rho).
FockCoefficients gauge_transform(const FockCoefficients& c, double t,
                                 PhaseMode mode, double param);

}  // namespace lll
