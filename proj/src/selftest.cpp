#include "lll/selftest.hpp"

#include <cmath>
#include <random>

#include "lll/analysis.hpp"
#include "lll/exact.hpp"
#include "lll/matrices.hpp"
#include "lll/potentials.hpp"
#include "lll/propagator.hpp"
#include "lll/quadrature.hpp"

namespace lll {

namespace {

Vec random_state(std::mt19937& gen, int n) {
  std::normal_distribution<double> dist;
  Vec c(n);
  for (int i = 0; i < n; ++i) c[i] = cplx(dist(gen), dist(gen));
  c /= c.norm();
  return c;
}

Sampler coeff_sampler(const Vec& c) {
  return [c](cplx z) { return evaluate(c, z); };
}

double binom(int n, int k) {
  double b = 1.0;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

// weight of node i*n_angular + a, matching basis_node_table's layout
Eigen::VectorXd node_weights(const PolarGrid& grid) {
  const double w_ang = 2.0 * M_PI / grid.n_angular;
  Eigen::VectorXd w(grid.radial_order() * grid.n_angular);
  for (int i = 0; i < grid.radial_order(); ++i)
    for (int a = 0; a < grid.n_angular; ++a)
      w[i * grid.n_angular + a] = grid.w_radial[i] * w_ang;
  return w;
}

Eigen::VectorXd node_radii_sq(const PolarGrid& grid) {
  Eigen::VectorXd r2(grid.radial_order() * grid.n_angular);
  for (int i = 0; i < grid.radial_order(); ++i)
    for (int a = 0; a < grid.n_angular; ++a)
      r2[i * grid.n_angular + a] = grid.r[i] * grid.r[i];
  return r2;
}

// int phi_j conj(phi_k) phi_l conj(phi_m) dL on a precomputed node table
cplx four_wave_quad(const Mat& table, const Eigen::VectorXd& w, int j, int k,
                    int l, int m) {
  cplx acc = 0.0;
  const int nodes = static_cast<int>(w.size());
  for (int i = 0; i < nodes; ++i)
    acc += w[i] * table(j, i) * std::conj(table(k, i)) * table(l, i) *
           std::conj(table(m, i));
  return acc;
}

double check_four_wave(const Mat& table, const Eigen::VectorXd& w) {
  double worst = 0.0;
  for (int S = 0; S <= 40; ++S) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = std::max(0, S - 20); 2 * j <= S; ++j)
      if (S - j <= 20) pairs.emplace_back(j, S - j);
    for (auto [j, l] : pairs)
      for (auto [k, m] : pairs) {
        const cplx q = four_wave_quad(table, w, j, k, l, m);
        worst = std::max(worst, std::abs(q - four_wave(j, k, l, m)));
      }
  }
  return worst;
}

double check_selection_rule(const Mat& table, const Eigen::VectorXd& w,
                            std::mt19937& gen) {
  std::uniform_int_distribution<int> pick(0, 20);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    int j = pick(gen), k = pick(gen), l = pick(gen), m = pick(gen);
    if (j + l == k + m) m = (m + 1) % 21;
    if (j + l == k + m) continue;
    worst = std::max(worst, std::abs(four_wave(j, k, l, m)));
    worst = std::max(worst, std::abs(four_wave_quad(table, w, j, k, l, m)));
  }
  return worst;
}

double hermiticity_defect(const Mat& M) {
  const double scale = M.cwiseAbs().maxCoeff();
  return (M - M.adjoint()).cwiseAbs().maxCoeff() / std::max(scale, 1e-300);
}

double check_hermiticity(std::mt19937& gen) {
  const int N = 64;
  Vec v = random_state(gen, 16);
  double worst = hermiticity_defect(potential_matrix(v, N));
  worst = std::max(worst,
                   hermiticity_defect(conjugated_generator(v, cplx(0.8, -0.3), 0.5, N)));
  auto spec = PotentialSpec::traveling_wave(1.0);
  worst = std::max(
      worst, hermiticity_defect(ltilde_matrix(2.0, SobolevScale::make(0.5, 1.0),
                                              spec.base_coeffs(), spec.drift(), N)));
  return worst;
}

double check_displacement_unitarity() {
  const int N = 64;
  Mat D = displacement_matrix(cplx(1.2, 0.8), N);
  Mat E = D.adjoint() * D - Mat::Identity(N, N);
  return E.topLeftCorner(N / 2, N / 2).cwiseAbs().maxCoeff();
}

double check_equivariance() {
  const int N = 64;
  const cplx beta(1.0, -0.5);
  const double theta = 0.7;
  Vec v = PotentialSpec::traveling_wave(1.0).base_coeffs();
  Mat A = conjugated_generator(v, beta, theta, N);
  Vec w = rotation_phases(theta, N).asDiagonal() * displacement_apply(beta, v, N);
  Mat B = potential_matrix(w, N);
  return (A - B).topLeftCorner(N / 2, N / 2).cwiseAbs().maxCoeff();
}

double check_mass_conservation() {
  SimulationConfig cfg;
  cfg.potential = PotentialSpec::traveling_wave(1.0);
  cfg.gauge = Gauge::Reduced;
  cfg.N = 64;
  cfg.dt = 0.01;
  cfg.t_max = 5.0;
  cfg.record_every = 10;
  auto res = evolve(cfg, TravelingWaveOracle::make(1.0).initial_coeffs());
  double worst = 0.0;
  for (double v : res.series.l2) worst = std::max(worst, std::abs(v - res.series.l2[0]));
  return worst;
}

double check_hypercontractivity(std::mt19937& gen, const PolarGrid& grid) {
  // (q/2pi)^{1/q} ||u||_q decreases in q on E; q = inf has factor 1
  auto scaled = [&](const Sampler& f, double p) {
    const double factor = std::isinf(p) ? 1.0 : std::pow(p / (2.0 * M_PI), 1.0 / p);
    return factor * lp_norm(f, p, grid);
  };
  const double inf = std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    Sampler f = coeff_sampler(random_state(gen, 32));
    const double n1 = scaled(f, 1.0), n2 = scaled(f, 2.0);
    const double n4 = scaled(f, 4.0), ninf = scaled(f, inf);
    worst = std::max({worst, n2 - n1, n4 - n2, ninf - n2});
  }
  return worst;
}

double check_moment_identity(const PolarGrid& grid) {
  auto spec = PotentialSpec::traveling_wave(1.0);
  auto oracle = TravelingWaveOracle::make(1.0);
  const int N = 64;
  const double h = 1e-3;
  double worst = 0.0;
  for (int k = 1; k <= 2; ++k)
    for (int i = 1; i <= 10; ++i) {
      const double t = 0.5 * i;
      const double lhs = (radial_moment(oracle_coeffs(oracle, t + h, N), k) -
                          radial_moment(oracle_coeffs(oracle, t - h, N), k)) /
                         (2.0 * h);
      Vec c = oracle_coeffs(oracle, t, N);
      double rhs = 0.0;
      for (int j = 1; j <= k; ++j) {
        cplx integral = quad_integral(
            [&](cplx z) {
              return std::pow(z, k) * std::pow(std::conj(z), k - j) *
                     std::norm(evaluate(c, z)) * traveling_wave_dz(spec, t, z, j);
            },
            grid);
        rhs += -2.0 * ((j % 2 == 0) ? 1.0 : -1.0) * binom(k, j) * integral.imag();
      }
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-12));
    }
  return worst;
}

// Pi(Hf) vs H(Pi f) for f = z^a zbar^b e^{-|z|^2/2}, a+b <= 6. The left
// side uses Hf = e^{-|z|^2/2}(2(a+b+1) z^a zbar^b - 4ab z^{a-1} zbar^{b-1});
// the projection of f is proportional to phi_{a-b}, so H acts there as
// multiplication by 2(a-b+1).
double check_projector_commutation(const PolarGrid& grid) {
  double worst = 0.0;
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; a + b <= 6; ++b) {
      Sampler f = [a, b](cplx z) {
        return std::pow(z, a) * std::pow(std::conj(z), b) *
               std::exp(-0.5 * std::norm(z));
      };
      Sampler hf = [a, b](cplx z) {
        cplx core = 2.0 * (a + b + 1.0) * std::pow(z, a) * std::pow(std::conj(z), b);
        if (a > 0 && b > 0)
          core -= 4.0 * a * b * std::pow(z, a - 1) * std::pow(std::conj(z), b - 1);
        return core * std::exp(-0.5 * std::norm(z));
      };
      const double factor = 2.0 * (a - b + 1.0);
      for (int ix = -2; ix <= 2; ++ix)
        for (int iy = -2; iy <= 2; ++iy) {
          const cplx z(0.5 * ix, 0.5 * iy);
          worst = std::max(worst,
                           std::abs(project(hf, z, grid) - factor * project(f, z, grid)));
        }
    }
  return worst;
}

double check_phase_invariance(std::mt19937& gen) {
  const double tau = 0.37;
  Vec c = random_state(gen, 64);
  Vec c2(64);
  for (int n = 0; n < 64; ++n) {
    const double ph = 2.0 * (n + 1.0) * tau;
    c2[n] = c[n] * cplx(std::cos(ph), std::sin(ph));
  }
  double worst = 0.0;
  for (int k = 1; k <= 3; ++k) {
    const double b1 = bracket_norm(c, k), b2 = bracket_norm(c2, k);
    worst = std::max(worst, std::abs(b1 - b2) / b1);
    const double m1 = radial_moment(c, k), m2 = radial_moment(c2, k);
    worst = std::max(worst, std::abs(m1 - m2) / m1);
  }
  return worst;
}

double check_parseval(std::mt19937& gen, const PolarGrid& grid) {
  double worst = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    Vec c = random_state(gen, 64);
    const double l2 = l2_norm(c);
    const double quad = lp_norm(coeff_sampler(c), 2.0, grid);
    worst = std::max(worst, std::abs(l2 * l2 - quad * quad));
  }
  return worst;
}

double check_norm_equivalence(std::mt19937& gen) {
  double c_max = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    Vec c = random_state(gen, 64);
    for (int s = 1; s <= 3; ++s) {
      const double r = h_sobolev_norm(c, s) / bracket_norm(c, s);
      c_max = std::max({c_max, r, 1.0 / r});
    }
  }
  return c_max;
}

double check_radial_moment_diagonal(const Mat& table, const Eigen::VectorXd& w,
                                    const Eigen::VectorXd& r2) {
  const int nodes = static_cast<int>(w.size());
  double worst = 0.0;
  for (int k = 1; k <= 2; ++k)
    for (int n = 0; n + k <= 40 && n < 40; ++n) {
      double quad = 0.0;
      for (int i = 0; i < nodes; ++i)
        quad += w[i] * std::pow(r2[i], k) * std::norm(table(n, i));
      Vec e = Vec::Zero(n + 1);
      e[n] = 1.0;
      const double exact = radial_moment(e, k);
      worst = std::max(worst, std::abs(quad - exact) / exact);
    }
  return worst;
}

double check_derivative_quotients(std::mt19937& gen, const PolarGrid& grid) {
  // ||d_zbar^j d_z^k (|v|^2)||_p <= C ||v||^2_{2p}; record the worst quotient
  const double inf = std::numeric_limits<double>::infinity();
  const std::pair<int, int> combos[] = {{0, 1}, {1, 1}, {2, 2}};
  double c_max = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    Vec v = random_state(gen, 16);
    Sampler vf = coeff_sampler(v);
    Sampler w = [vf](cplx z) { return cplx(std::norm(vf(z)), 0.0); };
    const double l4 = lp_norm(vf, 4.0, grid), linf = lp_norm(vf, inf, grid);
    for (auto [j, k] : combos) {
      Sampler dw = [w, j = j, k = k](cplx z) { return wirtinger_derivative(w, z, j, k); };
      c_max = std::max(c_max, lp_norm(dw, 2.0, grid) / (l4 * l4));
      c_max = std::max(c_max, lp_norm(dw, inf, grid) / (linf * linf));
    }
  }
  return c_max;
}

double check_projection_bound(std::mt19937& gen, const PolarGrid& grid) {
  // ||<z>^s Pi(Wu)|| <= C ||W||_inf ||<z>^s u|| for W = |V|^2
  const double inf = std::numeric_limits<double>::infinity();
  double c_max = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    Vec v = random_state(gen, 8);
    Vec u = random_state(gen, 32);
    const double w_inf = [&] {
      Sampler vf = coeff_sampler(v);
      return lp_norm([vf](cplx z) { return cplx(std::norm(vf(z)), 0.0); }, inf, grid);
    }();
    const int N = 48;
    Vec up = Vec::Zero(N);
    up.head(u.size()) = u;
    Vec pw = potential_matrix(v, N) * up;
    for (int s = 1; s <= 2; ++s)
      c_max = std::max(c_max, bracket_norm(pw, s) / (w_inf * bracket_norm(up, s)));
  }
  return c_max;
}

double check_gauge_consistency() {
  const double delta = 0.1;
  SimulationConfig cfg;
  cfg.potential = PotentialSpec::traveling_wave(1.0, delta);
  cfg.N = 48;
  cfg.dt = 5e-4;
  cfg.t_max = 2.0;
  cfg.record_every = 1000;
  Vec c0 = TravelingWaveOracle::make(1.0, delta).initial_coeffs();

  cfg.gauge = Gauge::Full;
  auto full = evolve(cfg, c0);
  Vec lifted = gauge_transform(full.final_state, full.final_time, PhaseMode::DeltaH, delta);

  cfg.gauge = Gauge::Reduced;
  auto reduced = evolve(cfg, c0);
  return (lifted - reduced.final_state).norm();
}

double check_potential_conservation(const PolarGrid& grid) {
  auto spec = PotentialSpec::traveling_wave(1.0, 0.1);
  const double inf = std::numeric_limits<double>::infinity();
  const double times[] = {0.0, 10.0, 100.0};
  double sup0 = 0.0, worst = 0.0;
  for (double t : times) {
    Sampler w = [&spec, t](cplx z) { return cplx(spec.value(t, z), 0.0); };
    const double sup = lp_norm(w, inf, grid);
    if (t == 0.0) sup0 = sup;
    worst = std::max(worst, std::abs(sup - sup0));
    worst = std::max(worst, std::max(0.0, sup - spec.epsilon));
    const double mass = quad_integral(w, grid).real();
    worst = std::max(worst, std::abs(mass - spec.epsilon));
  }
  return worst;
}

double check_coefficient_consistency(const PolarGrid&) {
  auto spec = PotentialSpec::traveling_wave(1.0, 0.1);
  double worst = 0.0;
  for (double t : {0.0, 3.0}) {
    Vec vt = potential_coeffs(spec, t, 64);
    for (int i = 0; i < 10; ++i) {
      const cplx z(0.4 * i - 2.0, 0.3 * i - 1.2);
      worst = std::max(worst, std::abs(std::norm(evaluate(vt, z)) - spec.value(t, z)));
    }
  }
  return worst;
}

double check_derivative_time_invariance() {
  auto spec = PotentialSpec::traveling_wave(1.0, 0.1);
  double worst = 0.0;
  for (auto [j, k] : {std::pair{0, 1}, std::pair{1, 1}}) {
    const double d0 = derivative_sup_estimate(spec, 0.0, j, k);
    const double d1 = derivative_sup_estimate(spec, 10.0, j, k);
    worst = std::max(worst, std::abs(d1 - d0));
  }
  worst = std::max(worst, std::max(0.0, derivative_sup_estimate(spec, 0.0, 0, 0) -
                                            spec.epsilon));
  return worst;
}

double check_displacement_entries(const PolarGrid& grid) {
  const cplx beta(0.7, -0.3);
  Mat D = displacement_matrix(beta, 8);
  Mat basis = Mat::Identity(8, 8);
  double worst = 0.0;
  for (int n = 0; n < 7; ++n) {
    Vec en = basis.col(n);
    Sampler shifted = [en, beta](cplx z) {
      return evaluate(en, z + beta) *
             std::exp(0.5 * (std::conj(z) * beta - z * std::conj(beta)));
    };
    for (int m = 0; m < 7; ++m) {
      Vec em = basis.col(m);
      const cplx q = quad_inner_product(shifted, coeff_sampler(em), grid);
      worst = std::max(worst, std::abs(q - D(m, n)));
    }
  }
  return worst;
}

double check_oracle_residual() {
  auto oracle = TravelingWaveOracle::make(1.0);
  auto spec = PotentialSpec::traveling_wave(1.0);
  const int N = 48;
  const double t = 1.0, h = 1e-4;
  Vec cp = oracle_coeffs(oracle, t + h, N);
  Vec cm = oracle_coeffs(oracle, t - h, N);
  Vec c = oracle_coeffs(oracle, t, N);
  Vec dc = (cp - cm) / (2.0 * h);
  Mat A = conjugated_generator(spec.base_coeffs(), spec.drift() * t, 0.0, N);
  Vec residual = cplx(0.0, 1.0) * dc - A * c;
  return residual.norm();
}

}  // namespace

std::vector<CheckResult> run_selftest(unsigned seed) {
  std::mt19937 gen(seed);
  PolarGrid grid = PolarGrid::make();
  PolarGrid grid_fine = PolarGrid::make(128, 256);
  Mat table = basis_node_table(grid_fine, 41);
  Eigen::VectorXd w_fine = node_weights(grid_fine);
  Eigen::VectorXd r2_fine = node_radii_sq(grid_fine);

  std::vector<CheckResult> out;
  auto add = [&out](const std::string& name, double measured, double tol) {
    out.push_back({name, measured, tol, measured <= tol});
  };

  add("four_wave_vs_quadrature", check_four_wave(table, w_fine), 1e-8);
  add("four_wave_selection_rule", check_selection_rule(table, w_fine, gen), 1e-10);
  add("generator_hermiticity", check_hermiticity(gen), 1e-12);
  add("displacement_unitarity", check_displacement_unitarity(), 1e-8);
  add("equivariance_cross_check", check_equivariance(), 1e-6);
  add("mass_conservation", check_mass_conservation(), 1e-10);
  add("hypercontractivity", check_hypercontractivity(gen, grid), 1e-6);
  add("moment_identity_residual", check_moment_identity(grid), 0.02);
  add("projector_commutation", check_projector_commutation(grid), 1e-6);
  add("phase_invariance", check_phase_invariance(gen), 1e-13);
  add("parseval", check_parseval(gen, grid), 1e-8);
  add("norm_equivalence_constant", check_norm_equivalence(gen), 10.0);
  add("radial_moment_diagonal", check_radial_moment_diagonal(table, w_fine, r2_fine),
      1e-8);
  add("derivative_bound_constant", check_derivative_quotients(gen, grid), 100.0);
  add("projection_bound_constant", check_projection_bound(gen, grid), 10.0);
  add("gauge_consistency", check_gauge_consistency(), 1e-6);
  add("potential_conservation", check_potential_conservation(grid), 1e-6);
  add("coefficient_consistency", check_coefficient_consistency(grid), 1e-8);
  add("derivative_time_invariance", check_derivative_time_invariance(), 1e-4);
  add("displacement_vs_quadrature", check_displacement_entries(grid), 1e-8);
  add("oracle_residual", check_oracle_residual(), 1e-4);
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace lll
