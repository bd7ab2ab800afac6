#include <doctest.h>

#include <cmath>

#include "lll/matrices.hpp"
#include "lll/potentials.hpp"
#include "lll/quadrature.hpp"

using namespace lll;

TEST_CASE("four_wave closed form") {
  CHECK(four_wave(0, 0, 0, 0) == doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-14));
  CHECK(four_wave(0, 1, 1, 0) == doctest::Approx(1.0 / (4.0 * M_PI)).epsilon(1e-14));
  CHECK(four_wave(0, 0, 1, 0) == 0.0);
  // symmetric under swapping the two holomorphic or the two conjugated slots
  CHECK(four_wave(2, 3, 5, 4) == doctest::Approx(four_wave(5, 3, 2, 4)).epsilon(1e-14));
  CHECK(four_wave(2, 3, 5, 4) == doctest::Approx(four_wave(2, 4, 5, 3)).epsilon(1e-14));
}

TEST_CASE("oscillator_eigenvalues") {
  auto ev = oscillator_eigenvalues(4);
  CHECK(ev[0] == doctest::Approx(2.0));
  CHECK(ev[3] == doctest::Approx(8.0));
}

TEST_CASE("potential_matrix for V = phi_0 is the diagonal 1/(pi 2^{n+1})") {
  Vec v = Vec::Zero(1);
  v[0] = 1.0;
  Mat M = potential_matrix(v, 6);
  for (int n = 0; n < 6; ++n) {
    CHECK(M(n, n).real() ==
          doctest::Approx(1.0 / (M_PI * std::pow(2.0, n + 1))).epsilon(1e-13));
    for (int m = 0; m < 6; ++m)
      if (m != n) CHECK(std::abs(M(m, n)) < 1e-15);
  }
  CHECK(potential_matrix(Vec::Zero(2), 4).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("potential_matrix is Hermitian and matches quadrature") {
  Vec v(3);
  v << cplx(0.4, 0.1), cplx(-0.2, 0.5), cplx(0.3, -0.3);
  Mat M = potential_matrix(v, 12);
  CHECK((M - M.adjoint()).cwiseAbs().maxCoeff() < 1e-14);

  auto grid = PolarGrid::make();
  auto w = [&v](double, cplx z) { return std::norm(evaluate(v, z)); };
  for (int m : {0, 3, 7})
    for (int n : {0, 2, 9})
      CHECK(std::abs(M(m, n) - matrix_element_quad(w, 0.0, m, n, grid)) < 1e-10);
}

TEST_CASE("displacement_matrix basics") {
  CHECK((displacement_matrix(0.0, 8) - Mat::Identity(8, 8)).cwiseAbs().maxCoeff() <
        1e-15);
  // beta = 1: D(1,1) = (1 - |beta|^2) e^{-1/2} = 0
  Mat D = displacement_matrix(1.0, 8);
  CHECK(std::abs(D(1, 1)) < 1e-14);
  CHECK(D(0, 0).real() == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
  CHECK(D(1, 0).real() == doctest::Approx(-std::exp(-0.5)).epsilon(1e-14));
  CHECK(D(0, 1).real() == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
}

TEST_CASE("displacement unitarity on the stable block") {
  const int N = 48;
  Mat D = displacement_matrix(cplx(0.9, 0.6), N);
  Mat E = D.adjoint() * D - Mat::Identity(N, N);
  CHECK(E.topLeftCorner(N / 2, N / 2).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("displacement_apply matches the full matrix") {
  const int N = 32;
  const cplx beta(0.4, -1.1);
  Vec v(2);
  v << cplx(0.5, 0.0), cplx(0.0, -0.8);
  Vec direct = displacement_matrix(beta, N) * Vec((Vec(N) << v, Vec::Zero(N - 2)).finished());
  Vec fast = displacement_apply(beta, v, N);
  CHECK((direct - fast).norm() < 1e-13);
}

TEST_CASE("displacement_tail Poisson mass") {
  double brute = 0.0;
  for (int n = 20; n < 300; ++n)
    brute += std::exp(-4.0 + n * std::log(4.0) - log_factorial(n));
  CHECK(displacement_tail(2.0, 20) == doctest::Approx(brute).epsilon(1e-10));
  CHECK(displacement_tail(2.0, 20) == doctest::Approx(3.2e-9).epsilon(0.05));
}

TEST_CASE("rotation_phases") {
  Vec ph = rotation_phases(0.0, 4);
  for (int n = 0; n < 4; ++n) CHECK(std::abs(ph[n] - 1.0) < 1e-15);
  CHECK(std::abs(rotation_phases(M_PI, 4)[1] + 1.0) < 1e-14);
}

TEST_CASE("conjugated_generator reduces to potential_matrix and matches quadrature") {
  Vec v = PotentialSpec::traveling_wave(1.0).base_coeffs();
  Mat plain = conjugated_generator(v, 0.0, 0.0, 16);
  CHECK((plain - potential_matrix(v, 16)).cwiseAbs().maxCoeff() < 1e-13);

  const cplx beta = 1.0;
  Mat M = conjugated_generator(v, beta, 0.0, 64);
  auto grid = PolarGrid::make();
  auto w = [&](double, cplx z) {
    const cplx shifted = evaluate(v, z + beta) *
                         std::exp(0.5 * (std::conj(z) * beta - z * std::conj(beta)));
    return std::norm(shifted);
  };
  CHECK(std::abs(M(0, 0) - matrix_element_quad(w, 0.0, 0, 0, grid)) < 1e-8);

  // trace equals the direct assembly's trace, and is real
  Vec shifted_coeffs = displacement_apply(beta, v, 64);
  Mat direct = potential_matrix(shifted_coeffs, 64);
  CHECK(std::abs(M.trace().imag()) < 1e-10);
  CHECK(std::abs(M.trace() - direct.trace()) < 1e-6);
}

TEST_CASE("ltilde_matrix is the plain generator at t = 0") {
  auto spec = PotentialSpec::traveling_wave(1.0);
  auto scale = SobolevScale::make(0.5, 1.0);
  Mat L0 = ltilde_matrix(0.0, scale, spec.base_coeffs(), spec.drift(), 24);
  Mat M0 = potential_matrix(spec.base_coeffs(), 24);
  CHECK((L0 - M0).cwiseAbs().maxCoeff() < 1e-13);

  Mat Lt = ltilde_matrix(3.0, scale, spec.base_coeffs(), spec.drift(), 24);
  CHECK((Lt - Lt.adjoint()).cwiseAbs().maxCoeff() < 1e-13);
  // phase twist preserves the diagonal and all singular values
  Mat Mt = conjugated_generator(spec.base_coeffs(), spec.drift() * 3.0, 0.0, 24);
  CHECK((Lt.diagonal() - Mt.diagonal()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("conjugated_generator rejects a truncation-breaking shift") {
  Vec v = PotentialSpec::traveling_wave(1.0).base_coeffs();
  CHECK_THROWS(conjugated_generator(v, 12.0, 0.0, 16));
}
