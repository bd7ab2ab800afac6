#include <doctest.h>

#include <cmath>

#include "lll/matrices.hpp"
#include "lll/potentials.hpp"
#include "lll/quadrature.hpp"

using namespace lll;

namespace {
Sampler phi(int n) {
  return [n](cplx z) {
    return std::pow(z, n) *
           std::exp(-0.5 * std::norm(z) - 0.5 * log_factorial(n)) / std::sqrt(M_PI);
  };
}
}  // namespace

TEST_CASE("grid integrates Gaussians exactly enough") {
  auto grid = PolarGrid::make();
  CHECK(quad_integral([](cplx z) { return std::exp(-std::norm(z)); }, grid).real() ==
        doctest::Approx(M_PI).epsilon(1e-13));
  CHECK(quad_integral([](cplx z) { return std::exp(-0.5 * std::norm(z)); }, grid)
            .real() == doctest::Approx(2.0 * M_PI).epsilon(1e-13));
}

TEST_CASE("quad_inner_product orthonormality") {
  auto grid = PolarGrid::make();
  CHECK(quad_inner_product(phi(0), phi(0), grid).real() ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(quad_inner_product(phi(0), phi(1), grid)) < 1e-12);
  auto zphi0 = [](cplx z) { return z * phi(0)(z); };
  CHECK(quad_inner_product(zphi0, zphi0, grid).real() ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("project reproduces and annihilates") {
  auto grid = PolarGrid::make();
  for (cplx z : {cplx(0.0, 0.0), cplx(0.7, -0.4), cplx(-1.3, 0.2)}) {
    CHECK(std::abs(project(phi(1), z, grid) - phi(1)(z)) < 1e-10);
    CHECK(std::abs(project([](cplx w) { return std::conj(w) * phi(0)(w); }, z, grid)) <
          1e-10);
  }
}

TEST_CASE("project is idempotent") {
  auto grid = PolarGrid::make();
  // f outside E: its projection must be a fixed point of Pi
  Sampler f = [](cplx w) {
    return std::exp(-0.6 * std::norm(w)) * (1.0 + std::conj(w));
  };
  for (cplx z : {cplx(0.3, 0.3), cplx(-0.5, 1.0)}) {
    const cplx once = project(f, z, grid);
    const cplx twice = project([&](cplx w) { return project(f, w, grid); }, z, grid);
    CHECK(std::abs(once - twice) < 1e-6);
  }
}

TEST_CASE("lp_norm examples") {
  auto grid = PolarGrid::make();
  CHECK(lp_norm(phi(0), 2.0, grid) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lp_norm(phi(0), std::numeric_limits<double>::infinity(), grid) ==
        doctest::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-6));
  CHECK(lp_norm(phi(0), 1.0, grid) ==
        doctest::Approx(2.0 * std::sqrt(M_PI)).epsilon(1e-12));
}

TEST_CASE("matrix_element_quad examples") {
  auto grid = PolarGrid::make();
  auto one = [](double, cplx) { return 1.0; };
  CHECK(matrix_element_quad(one, 0.0, 0, 0, grid).real() ==
        doctest::Approx(1.0).epsilon(1e-12));

  auto w0 = [](double, cplx z) { return std::exp(-std::norm(z)) / M_PI; };
  CHECK(matrix_element_quad(w0, 0.0, 0, 0, grid).real() ==
        doctest::Approx(four_wave(0, 0, 0, 0)).epsilon(1e-12));

  auto spec = PotentialSpec::traveling_wave(1.0);
  auto wt = [&spec](double t, cplx z) { return spec.value(t, z); };
  Mat M = potential_matrix(spec.base_coeffs(), 8);
  CHECK(std::abs(matrix_element_quad(wt, 0.0, 0, 0, grid) - M(0, 0)) < 1e-8);
}

TEST_CASE("wirtinger derivatives on closed forms") {
  Sampler zsq = [](cplx z) { return z * z; };
  const cplx z0(0.4, -0.7);
  CHECK(std::abs(wirtinger_derivative(zsq, z0, 0, 1) - 2.0 * z0) < 1e-7);
  CHECK(std::abs(wirtinger_derivative(zsq, z0, 1, 0)) < 1e-7);
  Sampler modsq = [](cplx z) { return cplx(std::norm(z), 0.0); };
  CHECK(std::abs(wirtinger_derivative(modsq, z0, 1, 1) - 1.0) < 1e-6);
}

TEST_CASE("basis_node_table matches evaluate") {
  auto grid = PolarGrid::make(16, 32);
  Mat table = basis_node_table(grid, 6);
  const double w_ang = 2.0 * M_PI / grid.n_angular;
  for (int n = 0; n < 6; ++n)
    for (int i : {0, 7, 15})
      for (int a : {0, 5, 31}) {
        const double th = w_ang * a;
        const cplx z(grid.r[i] * std::cos(th), grid.r[i] * std::sin(th));
        CHECK(std::abs(table(n, i * grid.n_angular + a) - phi(n)(z)) < 1e-13);
      }
}

TEST_CASE("grid validation") {
  CHECK_THROWS(PolarGrid::make(1, 256));
  CHECK_THROWS(PolarGrid::make(64, 2));
  auto grid = PolarGrid::make();
  CHECK_THROWS(lp_norm(phi(0), 0.5, grid));
}
