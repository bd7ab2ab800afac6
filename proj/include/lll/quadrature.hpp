#pragma once

#include <functional>

#include "lll/fock.hpp"

namespace lll {

using Sampler = std::function<cplx(cplx)>;

/// Polar quadrature grid over C adapted to Gaussian-decay integrands.
/// Radial part: Gauss-Laguerre in u = r^2 (weight e^{-u}), with the
/// weight unfolded so the rule applies to the raw integrand. Angular
/// part: uniform trapezoid, exact for e^{im theta}, |m| < n_angular.
struct PolarGrid {
  Eigen::VectorXd r;         // radial nodes, r_i = sqrt(u_i)
  Eigen::VectorXd w_radial;  // weights for int_0^inf f(r) r dr
  int n_angular;

  static PolarGrid make(int radial_order = 64, int n_angular = 256);

  int radial_order() const { return static_cast<int>(r.size()); }
};

/// int f(z) conj(g(z)) dL(z)
cplx quad_inner_product(const Sampler& f, const Sampler& g, const PolarGrid& grid);

/// int f(z) dL(z)
cplx quad_integral(const Sampler& f, const PolarGrid& grid);

/// (Pi f)(z) by quadrature of the Bargmann kernel
/// (1/pi) e^{-|z|^2/2} int e^{conj(w) z - |w|^2/2} f(w) dL(w).
cplx project(const Sampler& f, cplx z, const PolarGrid& grid);

/// ||f||_{L^p(C)}; p = inf takes the grid max plus local refinement.
double lp_norm(const Sampler& f, double p, const PolarGrid& grid);

/// int conj(phi_m) W(t,.) phi_n dL
cplx matrix_element_quad(const std::function<double(double, cplx)>& W, double t,
                         int m, int n, const PolarGrid& grid);

/// Wirtinger derivative d_zbar^j d_z^k f at z by nested central
/// differences; the step grows with the total order to keep the
/// rounding noise below the truncation error.
cplx wirtinger_derivative(const Sampler& f, cplx z, int j, int k);

/// phi_n(z) values on the grid nodes for n < nmax, laid out as
/// table(n, i*n_angular + a) with z = r_i e^{2 pi i a / n_angular}.
Mat basis_node_table(const PolarGrid& grid, int nmax);

}  // namespace lll
