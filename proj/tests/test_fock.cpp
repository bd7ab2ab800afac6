#include <doctest.h>

#include <cmath>

#include "lll/fock.hpp"
#include "lll/matrices.hpp"
#include "lll/quadrature.hpp"

using namespace lll;

namespace {
Vec basis_vec(int n, int size) {
  Vec e = Vec::Zero(size);
  e[n] = 1.0;
  return e;
}

Vec u_coeffs(double eps) {
  Vec u(2);
  u[0] = 0.5 * std::sqrt(eps);
  u[1] = cplx(0.0, 0.5 * std::sqrt(3.0 * eps));
  return u;
}
}  // namespace

TEST_CASE("l2_norm basics") {
  CHECK(l2_norm(basis_vec(0, 4)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(l2_norm(u_coeffs(1.0)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(l2_norm(Vec::Zero(3)) == 0.0);
}

TEST_CASE("h_sobolev_norm against oscillator eigenvalues") {
  CHECK(h_sobolev_norm(basis_vec(0, 1), 2.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(h_sobolev_norm(basis_vec(1, 2), 1.0) == doctest::Approx(2.0).epsilon(1e-14));
  Vec c(3);
  c << cplx(0.3, -0.1), cplx(0.0, 0.7), cplx(-0.2, 0.4);
  CHECK(h_sobolev_norm(c, 0.0) == doctest::Approx(l2_norm(c)).epsilon(1e-14));
}

TEST_CASE("htilde_norm eigenvalues (2n+3)^rho") {
  auto s0 = SobolevScale::make(0.0, 2.0);  // rho = 1/2
  CHECK(htilde_norm(basis_vec(0, 1), s0) ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  auto s1 = SobolevScale::make(0.5, 1.0);  // rho = 1
  CHECK(htilde_norm(basis_vec(1, 2), s1) ==
        doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
  Vec c(2);
  c << cplx(0.6, 0.0), cplx(0.0, 0.8);
  CHECK(htilde_norm(c, SobolevScale::make(0.25, 0.0)) ==
        doctest::Approx(l2_norm(c)).epsilon(1e-14));
}

TEST_CASE("SobolevScale validation") {
  CHECK(SobolevScale::make(0.0, 1.0).rho == doctest::Approx(0.5));
  CHECK(SobolevScale::make(0.75, 1.0).rho == doctest::Approx(2.0));
  CHECK_THROWS(SobolevScale::make(1.0, 1.0));
  CHECK_THROWS(SobolevScale::make(-0.1, 1.0));
  CHECK_THROWS(SobolevScale::make(0.0, -1.0));
}

TEST_CASE("radial_moment diagonal values and quadrature oracle") {
  CHECK(radial_moment(basis_vec(0, 1), 1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(radial_moment(basis_vec(1, 2), 1) == doctest::Approx(2.0).epsilon(1e-14));
  Vec c(3);
  c << cplx(0.5, 0.5), cplx(-0.3, 0.2), cplx(0.1, -0.6);
  CHECK(radial_moment(c, 0) ==
        doctest::Approx(l2_norm(c) * l2_norm(c)).epsilon(1e-14));

  auto grid = PolarGrid::make();
  auto f = [&c](cplx z) { return evaluate(c, z); };
  const double quad =
      quad_integral([&](cplx z) { return cplx(std::norm(z) * std::norm(f(z)), 0.0); },
                    grid)
          .real();
  CHECK(radial_moment(c, 1) == doctest::Approx(quad).epsilon(1e-10));
}

TEST_CASE("bracket_norm binomial expansion") {
  CHECK(bracket_norm(basis_vec(0, 1), 1) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  // int |z|^2 |U|^2 = 7/4 for the two-mode state
  CHECK(bracket_norm(u_coeffs(1.0), 1) ==
        doctest::Approx(std::sqrt(1.0 + 7.0 / 4.0)).epsilon(1e-14));
  Vec c(2);
  c << cplx(0.0, 1.0), cplx(1.0, 0.0);
  CHECK(bracket_norm(c, 0) == doctest::Approx(l2_norm(c)).epsilon(1e-14));
}

TEST_CASE("evaluate pointwise values") {
  CHECK(evaluate(basis_vec(0, 1), 0.0).real() ==
        doctest::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-14));
  CHECK(std::abs(evaluate(basis_vec(1, 2), 0.0)) == doctest::Approx(0.0));
  CHECK(evaluate(basis_vec(0, 1), 1.0).real() ==
        doctest::Approx(std::exp(-0.5) / std::sqrt(M_PI)).epsilon(1e-14));
}

TEST_CASE("tail_mass including the coherent Poisson tail") {
  CHECK(tail_mass(basis_vec(0, 2), 1) == 0.0);
  Vec c(2);
  c << 1.0, 1.0;
  c /= std::sqrt(2.0);
  CHECK(tail_mass(c, 1) == doctest::Approx(0.5).epsilon(1e-14));

  const cplx beta = 2.0;  // |beta|^2 = 4
  Vec col = displacement_matrix(beta, 64).col(0);
  double poisson = 0.0;
  for (int n = 20; n < 200; ++n)
    poisson += std::exp(-4.0 + n * std::log(4.0) - log_factorial(n));
  CHECK(tail_mass(col, 20) == doctest::Approx(poisson).epsilon(1e-6));
  CHECK(poisson == doctest::Approx(3.2e-9).epsilon(0.05));
}

TEST_CASE("log_factorial against exact integer factorials") {
  double exact = 1.0;
  for (int n = 1; n <= 20; ++n) {
    exact *= n;
    CHECK(std::exp(log_factorial(n)) == doctest::Approx(exact).epsilon(1e-13));
  }
}

TEST_CASE("phase invariance of weighted norms") {
  Vec c(8);
  for (int n = 0; n < 8; ++n) c[n] = cplx(std::sin(n + 1.0), std::cos(2.0 * n));
  Vec rotated(8);
  const double tau = 0.81;
  for (int n = 0; n < 8; ++n) {
    const double ph = 2.0 * (n + 1.0) * tau;
    rotated[n] = c[n] * cplx(std::cos(ph), std::sin(ph));
  }
  for (int k = 0; k <= 3; ++k) {
    CHECK(bracket_norm(rotated, k) == doctest::Approx(bracket_norm(c, k)).epsilon(1e-14));
    CHECK(radial_moment(rotated, k) ==
          doctest::Approx(radial_moment(c, k)).epsilon(1e-14));
  }
}
