#include "lll/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "lll/matrices.hpp"
#include "lll/quadrature.hpp"

namespace lll {

PotentialSpec PotentialSpec::traveling_wave(double epsilon, double delta) {
  if (epsilon <= 0.0) throw std::invalid_argument("epsilon must be > 0");
  PotentialSpec spec;
  spec.kind = PotentialKind::TravelingWave;
  spec.epsilon = epsilon;
  spec.delta = delta;
  return spec;
}

PotentialSpec PotentialSpec::gaussian_decay(double epsilon) {
  if (epsilon <= 0.0) throw std::invalid_argument("epsilon must be > 0");
  PotentialSpec spec;
  spec.kind = PotentialKind::GaussianDecay;
  spec.epsilon = epsilon;
  return spec;
}

PotentialSpec PotentialSpec::static_fock(FockCoefficients v) {
  PotentialSpec spec;
  spec.kind = PotentialKind::StaticFock;
  spec.static_coeffs = std::move(v);
  spec.epsilon = spec.static_coeffs.squaredNorm();
  return spec;
}

PotentialSpec PotentialSpec::custom(std::function<double(double, cplx)> sampler) {
  PotentialSpec spec;
  spec.kind = PotentialKind::Custom;
  spec.sampler = std::move(sampler);
  return spec;
}

double PotentialSpec::drift() const {
  return std::sqrt(3.0) * epsilon / (32.0 * M_PI);
}

FockCoefficients PotentialSpec::base_coeffs() const {
  switch (kind) {
    case PotentialKind::TravelingWave: {
      Vec v(2);
      v[0] = 0.5 * std::sqrt(epsilon);
      v[1] = cplx(0.0, -0.5 * std::sqrt(3.0 * epsilon));
      return v;
    }
    case PotentialKind::StaticFock:
      return static_coeffs;
    default:
      throw std::logic_error("no coefficient description for this potential kind");
  }
}

double PotentialSpec::value(double t, cplx z) const {
  switch (kind) {
    case PotentialKind::TravelingWave:
      return traveling_wave_value(*this, t, z);
    case PotentialKind::GaussianDecay:
      return gaussian_decay_value(*this, t, z);
    case PotentialKind::StaticFock:
      return std::norm(evaluate(static_coeffs, z));
    case PotentialKind::Custom:
      return sampler(t, z);
  }
  return 0.0;
}

cplx PotentialSpec::center(double t) const {
  if (kind == PotentialKind::TravelingWave) {
    const double th = 2.0 * delta * t;
    return -drift() * t * cplx(std::cos(th), std::sin(th));
  }
  return 0.0;
}

double traveling_wave_value(const PotentialSpec& spec, double t, cplx z) {
  if (spec.kind != PotentialKind::TravelingWave)
    throw std::invalid_argument("not a traveling-wave spec");
  const double th = -2.0 * spec.delta * t;
  const cplx zeta = z * cplx(std::cos(th), std::sin(th)) + spec.drift() * t;
  const cplx a = 1.0 - cplx(0.0, std::sqrt(3.0)) * zeta;
  return spec.epsilon / (4.0 * M_PI) * std::norm(a) * std::exp(-std::norm(zeta));
}

FockCoefficients potential_coeffs(const PotentialSpec& spec, double t, int N) {
  Vec shifted = displacement_apply(spec.drift() * t, spec.base_coeffs(), N);
  Vec ph = rotation_phases(-2.0 * spec.delta * t, N);
  return ph.asDiagonal() * shifted;
}

double gaussian_decay_value(const PotentialSpec& spec, double t, cplx z) {
  if (spec.kind != PotentialKind::GaussianDecay)
    throw std::invalid_argument("not a gaussian-decay spec");
  return spec.epsilon * 0.5 * (1.0 + std::cos(t)) * std::exp(-std::norm(z));
}

cplx traveling_wave_dz(const PotentialSpec& spec, double t, cplx z, int j) {
  const double th = -2.0 * spec.delta * t;
  const cplx rot = cplx(std::cos(th), std::sin(th));
  const cplx zeta = z * rot + spec.drift() * t;
  const cplx zb = std::conj(zeta);
  const cplx i3 = cplx(0.0, std::sqrt(3.0));
  const cplx p = 1.0 - i3 * zeta, q = 1.0 + i3 * zb;
  const double pref = spec.epsilon / (4.0 * M_PI);
  const cplx gauss = std::exp(-zeta * zb);
  cplx core;
  switch (j) {
    case 0: core = p * q; break;
    case 1: core = -i3 * q - zb * p * q; break;
    case 2: core = 2.0 * i3 * zb * q + zb * zb * p * q; break;
    default: throw std::invalid_argument("analytic d_z only up to order 2");
  }
  return pref * std::pow(rot, j) * core * gauss;
}

double derivative_sup_estimate(const PotentialSpec& spec, double t, int j, int k) {
  if (j > 3 || k > 3) throw std::invalid_argument("orders up to 3 only");
  Sampler w = [&](cplx z) { return cplx(spec.value(t, z), 0.0); };
  const cplx c = spec.center(t);
  const double L = 8.0, h0 = 0.125;
  std::vector<std::pair<double, cplx>> nodes;
  for (double x = -L; x <= L; x += h0)
    for (double y = -L; y <= L; y += h0) {
      const cplx z = c + cplx(x, y);
      nodes.emplace_back(std::abs(wirtinger_derivative(w, z, j, k)), z);
    }
  // refine around the best few coarse candidates; near-ties can sit in
  // different basins and only one of them holds the true sup
  std::partial_sort(nodes.begin(), nodes.begin() + 12, nodes.end(),
                    [](const auto& a, const auto& b) { return a.first > b.first; });
  double best = nodes[0].first;
  for (int cand = 0; cand < 12; ++cand) {
    double h = h0;
    double local = nodes[cand].first;
    cplx zbest = nodes[cand].second;
    for (int round = 0; round < 4; ++round) {
      h *= 0.25;
      const cplx zc = zbest;
      for (int ix = -4; ix <= 4; ++ix)
        for (int iy = -4; iy <= 4; ++iy) {
          const cplx z = zc + cplx(ix * h, iy * h);
          const double v = std::abs(wirtinger_derivative(w, z, j, k));
          if (v > local) { local = v; zbest = z; }
        }
    }
    best = std::max(best, local);
  }
  return best;
}

}  // namespace lll
