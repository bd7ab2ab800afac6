#include "lll/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace lll {

PolarGrid PolarGrid::make(int radial_order, int n_angular) {
  if (radial_order < 2 || n_angular < 4)
    throw std::invalid_argument("grid too small");

  // Golub-Welsch for Laguerre: J has diagonal 2i+1 and off-diagonal i+1.
  Eigen::VectorXd diag(radial_order), off(radial_order - 1);
  for (int i = 0; i < radial_order; ++i) diag[i] = 2.0 * i + 1.0;
  for (int i = 0; i + 1 < radial_order; ++i) off[i] = i + 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);

  PolarGrid g;
  g.r.resize(radial_order);
  g.w_radial.resize(radial_order);
  g.n_angular = n_angular;
  for (int i = 0; i < radial_order; ++i) {
    const double u = es.eigenvalues()[i];
    g.r[i] = std::sqrt(u);
    // Weight via the Christoffel function 1/sum_k L_k(u)^2 of the
    // orthonormal Laguerre family, log-scaled: the eigenvector-squared
    // form underflows at the outer nodes and the e^{+u} unfolding would
    // blow that noise up.
    double pm = 0.0, pc = 1.0, S = 1.0, lg = 0.0;
    for (int k = 0; k + 1 < radial_order; ++k) {
      const double pn = ((2.0 * k + 1.0 - u) * pc - k * pm) / (k + 1.0);
      pm = pc;
      pc = pn;
      S += pc * pc;
      if (std::abs(pc) > 1e120) {
        pm *= 1e-120;
        pc *= 1e-120;
        S *= 1e-240;
        lg += std::log(1e120);
      }
    }
    // int_0^inf f(r) r dr = (1/2) int f(sqrt(u)) du; unfold the e^{-u}.
    g.w_radial[i] = 0.5 * std::exp(u - std::log(S) - 2.0 * lg);
  }
  return g;
}

namespace {

template <class F>
cplx grid_sum(const PolarGrid& grid, F&& node_value) {
  const double w_ang = 2.0 * M_PI / grid.n_angular;
  cplx acc = 0.0;
  for (int i = 0; i < grid.radial_order(); ++i) {
    cplx ring = 0.0;
    for (int a = 0; a < grid.n_angular; ++a) {
      const double th = w_ang * a;
      ring += node_value(cplx(grid.r[i] * std::cos(th), grid.r[i] * std::sin(th)));
    }
    acc += grid.w_radial[i] * w_ang * ring;
  }
  return acc;
}

}  // namespace

cplx quad_integral(const Sampler& f, const PolarGrid& grid) {
  return grid_sum(grid, [&](cplx z) { return f(z); });
}

cplx quad_inner_product(const Sampler& f, const Sampler& g, const PolarGrid& grid) {
  return grid_sum(grid, [&](cplx z) { return f(z) * std::conj(g(z)); });
}

cplx project(const Sampler& f, cplx z, const PolarGrid& grid) {
  cplx integral = grid_sum(grid, [&](cplx w) {
    return std::exp(std::conj(w) * z - 0.5 * std::norm(w)) * f(w);
  });
  return std::exp(-0.5 * std::norm(z)) / M_PI * integral;
}

double lp_norm(const Sampler& f, double p, const PolarGrid& grid) {
  if (p < 1.0) throw std::invalid_argument("p must be >= 1");
  if (std::isinf(p)) {
    // grid max, then two rounds of local refinement around the maximizer
    double best = 0.0;
    cplx zbest = 0.0;
    const double w_ang = 2.0 * M_PI / grid.n_angular;
    for (int i = 0; i < grid.radial_order(); ++i)
      for (int a = 0; a < grid.n_angular; ++a) {
        const double th = w_ang * a;
        cplx z(grid.r[i] * std::cos(th), grid.r[i] * std::sin(th));
        double v = std::abs(f(z));
        if (v > best) { best = v; zbest = z; }
      }
    double h = 0.5;
    for (int round = 0; round < 6; ++round) {
      cplx zc = zbest;
      for (int ix = -4; ix <= 4; ++ix)
        for (int iy = -4; iy <= 4; ++iy) {
          cplx z = zc + cplx(ix * h, iy * h);
          double v = std::abs(f(z));
          if (v > best) { best = v; zbest = z; }
        }
      h *= 0.25;
    }
    return best;
  }
  cplx acc = grid_sum(grid, [&](cplx z) { return cplx(std::pow(std::abs(f(z)), p), 0.0); });
  return std::pow(acc.real(), 1.0 / p);
}

cplx matrix_element_quad(const std::function<double(double, cplx)>& W, double t,
                         int m, int n, const PolarGrid& grid) {
  auto phi = [](int k, cplx z) {
    return std::pow(z, k) *
           std::exp(-0.5 * std::norm(z) - 0.5 * log_factorial(k)) / std::sqrt(M_PI);
  };
  return grid_sum(grid, [&](cplx z) {
    return std::conj(phi(m, z)) * W(t, z) * phi(n, z);
  });
}

cplx wirtinger_derivative(const Sampler& f, cplx z, int j, int k) {
  const int order = j + k;
  if (order == 0) return f(z);
  // step per total derivative order; 1e-4 below order 3, wider above
  static const double steps[] = {0.0, 1e-4, 1e-4, 2e-3, 6e-3, 1.2e-2, 2e-2};
  const double h = steps[std::min(order, 6)];
  Sampler g = f;
  // peel one derivative at a time, d_z = (d_x - i d_y)/2, d_zbar = (d_x + i d_y)/2
  for (int it = 0; it < k; ++it) {
    Sampler prev = g;
    g = [prev, h](cplx w) {
      cplx dx = (prev(w + h) - prev(w - h)) / (2.0 * h);
      cplx dy = (prev(w + cplx(0, h)) - prev(w - cplx(0, h))) / (2.0 * h);
      return 0.5 * (dx - cplx(0, 1) * dy);
    };
  }
  for (int it = 0; it < j; ++it) {
    Sampler prev = g;
    g = [prev, h](cplx w) {
      cplx dx = (prev(w + h) - prev(w - h)) / (2.0 * h);
      cplx dy = (prev(w + cplx(0, h)) - prev(w - cplx(0, h))) / (2.0 * h);
      return 0.5 * (dx + cplx(0, 1) * dy);
    };
  }
  return g(z);
}

Mat basis_node_table(const PolarGrid& grid, int nmax) {
  Mat table(nmax, grid.radial_order() * grid.n_angular);
  const double w_ang = 2.0 * M_PI / grid.n_angular;
  for (int i = 0; i < grid.radial_order(); ++i)
    for (int a = 0; a < grid.n_angular; ++a) {
      const double th = w_ang * a;
      cplx z(grid.r[i] * std::cos(th), grid.r[i] * std::sin(th));
      cplx phi = std::exp(-0.5 * std::norm(z)) / std::sqrt(M_PI);
      for (int n = 0; n < nmax; ++n) {
        table(n, i * grid.n_angular + a) = phi;
        phi *= z / std::sqrt(n + 1.0);
      }
    }
  return table;
}

}  // namespace lll
