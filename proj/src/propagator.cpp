#include "lll/propagator.hpp"

#include <Eigen/LU>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "lll/matrices.hpp"
#include "lll/quadrature.hpp"

namespace lll {

namespace {

constexpr cplx kI{0.0, 1.0};

Vec cayley_dense(const Mat& A, double dt, const Vec& c) {
  const int N = static_cast<int>(c.size());
  const cplx eta = kI * (0.5 * dt);
  Mat lhs = Mat::Identity(N, N) + eta * A;
  Vec rhs = c - eta * (A * c);
  Eigen::PartialPivLU<Mat> lu(lhs);
  Vec out = lu.solve(rhs);
  if (!out.allFinite()) throw std::runtime_error("Cayley linear solve failed");
  return out;
}

// Shapes the per-step work of evolve(); all forms are Cayley steps.
struct GeneratorProgram {
  enum class Form { Diagonal, Constant, Conjugated, Generic } form;
  std::function<Eigen::VectorXd(double)> diagonal;  // Diagonal: a_n(t)
  Mat core;                                         // Constant / Conjugated
  std::function<Mat(double)> transform;             // Conjugated: unitary T(t)
  std::function<Mat(double)> assemble;              // Generic
};

GeneratorProgram build_program(const SimulationConfig& cfg) {
  const auto& pot = cfg.potential;
  const int N = cfg.N;
  GeneratorProgram prog;

  auto htilde_phases = [N, rho = cfg.scale.rho](double t) {
    Vec ph(N);
    for (int n = 0; n < N; ++n) {
      const double a = -t * htilde_eigenvalue(n, rho);
      ph[n] = cplx(std::cos(a), std::sin(a));
    }
    return ph;
  };

  switch (pot.kind) {
    case PotentialKind::GaussianDecay: {
      // Pi(e^{-|z|^2} phi_n) = 2^{-(n+1)} phi_n, so the generator is diagonal
      Eigen::VectorXd base(N);
      for (int n = 0; n < N; ++n) base[n] = std::pow(0.5, n + 1);
      const double eps = pot.epsilon, delta = pot.delta;
      const bool full = cfg.gauge == Gauge::Full;
      prog.form = GeneratorProgram::Form::Diagonal;
      prog.diagonal = [base, eps, delta, full, N](double t) {
        Eigen::VectorXd d = eps * 0.5 * (1.0 + std::cos(t)) * base;
        if (full)
          for (int n = 0; n < N; ++n) d[n] += 2.0 * delta * (n + 1.0);
        return d;
      };
      return prog;
    }
    case PotentialKind::TravelingWave: {
      Mat M0 = potential_matrix(pot.base_coeffs(), N);
      const double alpha = pot.drift();
      if (cfg.gauge == Gauge::Reduced) {
        prog.form = GeneratorProgram::Form::Conjugated;
        prog.core = std::move(M0);
        prog.transform = [alpha, N](double t) { return displacement_matrix(alpha * t, N); };
      } else if (cfg.gauge == Gauge::Tilde) {
        prog.form = GeneratorProgram::Form::Conjugated;
        prog.core = std::move(M0);
        prog.transform = [alpha, N, htilde_phases](double t) {
          return Mat(htilde_phases(t).asDiagonal() * displacement_matrix(alpha * t, N));
        };
      } else {
        const double delta = pot.delta;
        prog.form = GeneratorProgram::Form::Generic;
        prog.assemble = [M0 = std::move(M0), alpha, delta, N](double t) {
          Mat T = rotation_phases(-2.0 * delta * t, N).asDiagonal() *
                  displacement_matrix(alpha * t, N);
          Mat A = T * M0 * T.adjoint();
          for (int n = 0; n < N; ++n) A(n, n) += 2.0 * delta * (n + 1.0);
          return A;
        };
      }
      return prog;
    }
    case PotentialKind::StaticFock: {
      Mat M = potential_matrix(pot.static_coeffs, N);
      if (cfg.gauge == Gauge::Full) {
        for (int n = 0; n < N; ++n) M(n, n) += 2.0 * pot.delta * (n + 1.0);
        prog.form = GeneratorProgram::Form::Constant;
        prog.core = std::move(M);
      } else if (cfg.gauge == Gauge::Tilde) {
        prog.form = GeneratorProgram::Form::Conjugated;
        prog.core = std::move(M);
        prog.transform = [htilde_phases, N](double t) {
          return Mat(Mat(htilde_phases(t).asDiagonal()));
        };
      } else {
        prog.form = GeneratorProgram::Form::Constant;
        prog.core = std::move(M);
      }
      return prog;
    }
    case PotentialKind::Custom: {
      // slow path: every entry by quadrature at each half step
      auto grid = std::make_shared<PolarGrid>(PolarGrid::make());
      auto sampler = pot.sampler;
      const double delta = pot.delta;
      const bool full = cfg.gauge == Gauge::Full;
      prog.form = GeneratorProgram::Form::Generic;
      prog.assemble = [grid, sampler, delta, full, N](double t) {
        Mat A(N, N);
        for (int m = 0; m < N; ++m)
          for (int n = m; n < N; ++n) {
            A(m, n) = matrix_element_quad(sampler, t, m, n, *grid);
            A(n, m) = std::conj(A(m, n));
          }
        if (full)
          for (int n = 0; n < N; ++n) A(n, n) += 2.0 * delta * (n + 1.0);
        return A;
      };
      return prog;
    }
  }
  throw std::logic_error("unknown potential kind");
}

}  // namespace

FockCoefficients step_unitary(const FockCoefficients& c, double t, double dt,
                              const std::function<Mat(double)>& generator) {
  return cayley_dense(generator(t + 0.5 * dt), dt, c);
}

EvolveResult evolve(const SimulationConfig& cfg, const FockCoefficients& c0) {
  if (cfg.dt <= 0.0 || cfg.t_max < 0.0) throw std::invalid_argument("bad time stepping");
  if (cfg.tail_tolerance <= 0.0 || cfg.tail_tolerance >= 1.0)
    throw std::invalid_argument("tail_tolerance must be in (0,1)");
  if (c0.size() > cfg.N) throw std::invalid_argument("initial state larger than truncation");

  const int N = cfg.N;
  Vec c = Vec::Zero(N);
  c.head(c0.size()) = c0;

  GeneratorProgram prog = build_program(cfg);
  const int tail_index = N - (N + 7) / 8;

  EvolveResult result;
  result.series.init(cfg.moment_orders, cfg.s_list);

  // constant-core Cayley factorization, reused across steps
  Eigen::PartialPivLU<Mat> lu;
  double lu_dt = -1.0;
  auto ensure_lu = [&](double dt) {
    if (lu_dt == dt) return;
    const cplx eta = kI * (0.5 * dt);
    lu.compute(Mat(Mat::Identity(N, N) + eta * prog.core));
    lu_dt = dt;
  };

  auto do_step = [&](double t, double dt) {
    const double th = t + 0.5 * dt;
    const cplx eta = kI * (0.5 * dt);
    switch (prog.form) {
      case GeneratorProgram::Form::Diagonal: {
        Eigen::VectorXd a = prog.diagonal(th);
        for (int n = 0; n < N; ++n)
          c[n] *= (1.0 - eta * a[n]) / (1.0 + eta * a[n]);
        break;
      }
      case GeneratorProgram::Form::Constant: {
        ensure_lu(dt);
        c = lu.solve(Vec(c - eta * (prog.core * c)));
        break;
      }
      case GeneratorProgram::Form::Conjugated: {
        ensure_lu(dt);
        Mat T = prog.transform(th);
        Vec w = T.adjoint() * c;
        w = lu.solve(Vec(w - eta * (prog.core * w)));
        c = T * w;
        break;
      }
      case GeneratorProgram::Form::Generic:
        c = cayley_dense(prog.assemble(th), dt, c);
        break;
    }
  };

  auto record = [&](double t) {
    result.series.record(t, c, tail_index, cfg.scale);
    if (cfg.keep_states) result.states.emplace_back(t, c);
  };

  record(0.0);
  const long nsteps = static_cast<long>(std::ceil(cfg.t_max / cfg.dt - 1e-12));
  double t = 0.0;
  for (long step = 0; step < nsteps; ++step) {
    const double dt = std::min(cfg.dt, cfg.t_max - t);
    do_step(t, dt);
    t += dt;
    const bool at_end = step + 1 == nsteps;
    if ((step + 1) % cfg.record_every == 0 || at_end) {
      if (tail_mass(c, tail_index) > cfg.tail_tolerance) {
        result.tail_abort = true;
        record(t);
        break;
      }
      record(t);
    }
  }
  result.final_state = c;
  result.final_time = t;
  return result;
}

FockCoefficients gauge_transform(const FockCoefficients& c, double t,
                                 PhaseMode mode, double param) {
  Vec out(c.size());
  for (int n = 0; n < c.size(); ++n) {
    double phase = 0.0;
    switch (mode) {
      case PhaseMode::DeltaH: phase = 2.0 * param * (n + 1.0) * t; break;
      case PhaseMode::DeltaHInverse: phase = -2.0 * param * (n + 1.0) * t; break;
      case PhaseMode::HTilde: phase = t * htilde_eigenvalue(n, param); break;
      case PhaseMode::HTildeInverse: phase = -t * htilde_eigenvalue(n, param); break;
    }
    out[n] = c[n] * cplx(std::cos(phase), std::sin(phase));
  }
  return out;
}

}  // namespace lll
