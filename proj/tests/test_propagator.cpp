#include <doctest.h>

#include <cmath>

#include "lll/analysis.hpp"
#include "lll/exact.hpp"
#include "lll/propagator.hpp"

using namespace lll;

TEST_CASE("step_unitary with zero generator") {
  Vec c(3);
  c << cplx(0.1, 0.2), cplx(0.3, -0.4), cplx(0.0, 0.5);
  Vec out = step_unitary(c, 0.0, 0.1, [](double) { return Mat::Zero(3, 3); });
  CHECK((out - c).norm() < 1e-15);
}

TEST_CASE("step_unitary phase accuracy on the oscillator diagonal") {
  const int N = 6;
  auto gen = [N](double) {
    Mat A = Mat::Zero(N, N);
    for (int n = 0; n < N; ++n) A(n, n) = 2.0 * (n + 1.0);
    return A;
  };
  Vec c = Vec::Ones(N) / std::sqrt(static_cast<double>(N));
  const double dt = 1e-3;
  Vec out = step_unitary(c, 0.0, dt, gen);
  for (int n = 0; n < N; ++n) {
    // the Cayley phase per step, exact up to roundoff
    const cplx eta(0.0, 0.5 * dt * 2.0 * (n + 1.0));
    CHECK(std::abs(out[n] - c[n] * (1.0 - eta) / (1.0 + eta)) < 1e-14);
    // and close to the true exponential at this step size
    const double ph = -2.0 * (n + 1.0) * dt;
    CHECK(std::abs(out[n] - c[n] * cplx(std::cos(ph), std::sin(ph))) < 1e-7);
  }
}

TEST_CASE("evolve with zero potential is the identity in Reduced gauge") {
  SimulationConfig cfg;
  cfg.potential = PotentialSpec::static_fock(Vec::Zero(1));
  cfg.gauge = Gauge::Reduced;
  cfg.N = 8;
  cfg.dt = 1e-2;
  cfg.t_max = 1.0;
  Vec c0(2);
  c0 << cplx(0.6, 0.0), cplx(0.0, 0.8);
  auto res = evolve(cfg, c0);
  CHECK((res.final_state.head(2) - c0).norm() < 1e-14);
}

TEST_CASE("evolve with zero potential in Full gauge is the exact oscillator flow") {
  SimulationConfig cfg;
  cfg.potential = PotentialSpec::static_fock(Vec::Zero(1));
  cfg.potential.delta = 1.0;
  cfg.gauge = Gauge::Full;
  cfg.N = 8;
  cfg.dt = 1e-3;
  cfg.t_max = 1.0;
  Vec c0 = Vec::Zero(8);
  c0.head(4) = Vec::Ones(4) / 2.0;
  auto res = evolve(cfg, c0);
  CHECK(res.final_time == doctest::Approx(1.0));
  for (int n = 0; n < 4; ++n) {
    const double ph = -2.0 * (n + 1.0);
    // accumulated Cayley phase drift is ~(lambda dt)^3/12 per step
    CHECK(std::abs(res.final_state[n] - c0[n] * cplx(std::cos(ph), std::sin(ph))) <
          1e-4);
  }
}

TEST_CASE("traveling wave run tracks the exact solution") {
  SimulationConfig cfg;
  cfg.potential = PotentialSpec::traveling_wave(1.0);
  cfg.gauge = Gauge::Reduced;
  cfg.N = 64;
  cfg.dt = 5e-3;
  cfg.t_max = 5.0;
  cfg.record_every = 100;
  cfg.keep_states = true;
  auto oracle = TravelingWaveOracle::make(1.0);
  auto res = evolve(cfg, oracle.initial_coeffs());
  CHECK(compare_to_oracle(res.states, oracle) < 1e-6);

  // mass conservation along the way
  for (double v : res.series.l2) CHECK(std::abs(v - 1.0) < 1e-12);
}

TEST_CASE("halving dt divides the error by roughly four") {
  auto oracle = TravelingWaveOracle::make(1.0);
  auto run = [&](double dt) {
    SimulationConfig cfg;
    cfg.potential = PotentialSpec::traveling_wave(1.0);
    cfg.gauge = Gauge::Reduced;
    cfg.N = 64;
    cfg.dt = dt;
    cfg.t_max = 5.0;
    cfg.record_every = 1000000;
    cfg.keep_states = true;
    return compare_to_oracle(evolve(cfg, oracle.initial_coeffs()).states, oracle);
  };
  const double e1 = run(0.02), e2 = run(0.01);
  CHECK(e1 / e2 > 3.2);
  CHECK(e1 / e2 < 4.8);
}

TEST_CASE("gaussian decay keeps every moment constant") {
  SimulationConfig cfg;
  cfg.potential = PotentialSpec::gaussian_decay(1.0);
  cfg.gauge = Gauge::Reduced;
  cfg.N = 16;
  cfg.dt = 0.01;
  cfg.t_max = 20.0;
  cfg.record_every = 100;
  cfg.moment_orders = {1, 2};
  Vec c0(3);
  c0 << cplx(0.5, 0.0), cplx(0.0, 0.7), cplx(0.3, -0.4);
  c0 /= c0.norm();
  auto res = evolve(cfg, c0);
  for (auto& col : res.series.moments)
    for (double v : col) CHECK(v == doctest::Approx(col[0]).epsilon(1e-10));
}

TEST_CASE("tail abort triggers on an undersized truncation") {
  SimulationConfig cfg;
  cfg.potential = PotentialSpec::traveling_wave(1.0);
  cfg.gauge = Gauge::Reduced;
  cfg.N = 8;  // far too small for t_max = 200 (alpha t ~ 3.4)
  cfg.dt = 0.01;
  cfg.t_max = 200.0;
  cfg.record_every = 100;
  cfg.tail_tolerance = 1e-6;
  auto res = evolve(cfg, TravelingWaveOracle::make(1.0).initial_coeffs());
  CHECK(res.tail_abort);
  CHECK(res.final_time < 200.0);
}

TEST_CASE("gauge_transform phases") {
  Vec c(3);
  c << cplx(1.0, 0.0), cplx(0.0, 1.0), cplx(-0.5, 0.5);
  CHECK((gauge_transform(c, 0.0, PhaseMode::DeltaH, 0.7) - c).norm() < 1e-15);
  Vec fwd = gauge_transform(c, 1.3, PhaseMode::HTilde, 1.0);
  Vec back = gauge_transform(fwd, 1.3, PhaseMode::HTildeInverse, 1.0);
  CHECK((back - c).norm() < 1e-14);
  Vec d = gauge_transform(c, 2.0, PhaseMode::DeltaH, 0.25);
  const double ph = 2.0 * 0.25 * 1.0 * 2.0;  // n = 0
  CHECK(std::abs(d[0] - c[0] * cplx(std::cos(ph), std::sin(ph))) < 1e-14);
}

TEST_CASE("config validation") {
  SimulationConfig cfg;
  cfg.potential = PotentialSpec::gaussian_decay(1.0);
  Vec c0 = Vec::Ones(1);
  cfg.dt = -1.0;
  CHECK_THROWS(evolve(cfg, c0));
  cfg.dt = 0.01;
  cfg.tail_tolerance = 2.0;
  CHECK_THROWS(evolve(cfg, c0));
  cfg.tail_tolerance = 1e-6;
  cfg.N = 4;
  CHECK_THROWS(evolve(cfg, Vec::Ones(8)));
}
