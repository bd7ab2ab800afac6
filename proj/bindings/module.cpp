#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lll/analysis.hpp"
#include "lll/exact.hpp"
#include "lll/fock.hpp"
#include "lll/matrices.hpp"
#include "lll/potentials.hpp"
#include "lll/propagator.hpp"
#include "lll/selftest.hpp"
#include "lll/transport.hpp"

namespace py = pybind11;
using namespace lll;

namespace {

PotentialSpec make_potential(const std::string& kind, double epsilon, double delta,
                             const Vec& coeffs) {
  PotentialSpec spec;
  if (kind == "traveling_wave")
    spec = PotentialSpec::traveling_wave(epsilon, delta);
  else if (kind == "gaussian_decay")
    spec = PotentialSpec::gaussian_decay(epsilon);
  else if (kind == "static_fock")
    spec = PotentialSpec::static_fock(coeffs);
  else
    throw std::invalid_argument("unknown potential kind: " + kind);
  spec.delta = delta;
  return spec;
}

py::dict series_to_dict(const NormSeries& s) {
  py::dict out;
  for (const auto& name : s.column_names()) out[name.c_str()] = *s.column(name);
  return out;
}

}  // namespace

PYBIND11_MODULE(_lllspec, m) {
  m.doc() = "lowest Landau level spectral simulator";

  py::class_<SobolevScale>(m, "SobolevScale")
      .def_static("make", &SobolevScale::make, py::arg("tau"), py::arg("s"))
      .def_readonly("tau", &SobolevScale::tau)
      .def_readonly("s", &SobolevScale::s)
      .def_readonly("rho", &SobolevScale::rho);

  m.def("four_wave", &four_wave);
  m.def("l2_norm", &l2_norm);
  m.def("h_sobolev_norm", &h_sobolev_norm);
  m.def("htilde_norm", &htilde_norm);
  m.def("radial_moment", &radial_moment);
  m.def("bracket_norm", &bracket_norm);
  m.def("evaluate", &evaluate);
  m.def("tail_mass", &tail_mass);

  m.def("displacement_matrix", &displacement_matrix, py::arg("beta"), py::arg("N"));
  m.def("potential_matrix", &potential_matrix, py::arg("coeffs"), py::arg("N"));
  m.def("ltilde_matrix", &ltilde_matrix, py::arg("t"), py::arg("scale"),
        py::arg("coeffs"), py::arg("drift"), py::arg("N"),
        py::arg("tail_tolerance") = 1e-6);

  py::class_<TravelingWaveOracle>(m, "TravelingWaveOracle")
      .def_static("make", &TravelingWaveOracle::make, py::arg("epsilon"),
                  py::arg("delta") = 0.0)
      .def_readonly("epsilon", &TravelingWaveOracle::epsilon)
      .def_readonly("lambda_", &TravelingWaveOracle::lambda)
      .def_readonly("alpha", &TravelingWaveOracle::alpha)
      .def("initial_coeffs", &TravelingWaveOracle::initial_coeffs);
  m.def("oracle_coeffs", &oracle_coeffs);
  m.def("oracle_moment1", &oracle_moment1);
  m.def("oracle_truncation", &oracle_truncation);

  m.def("fit_slope",
        [](const std::vector<double>& t, const std::vector<double>& v, double a,
           double b) {
          auto f = fit_slope(t, v, a, b);
          return py::make_tuple(f.slope, f.slope_err, f.samples);
        },
        py::arg("t"), py::arg("value"), py::arg("t_min"), py::arg("t_max"));

  m.def("simulate",
        [](const std::string& potential, double epsilon, double delta,
           const Vec& static_coeffs, const std::string& gauge, double tau,
           const std::vector<double>& s_list, const std::vector<int>& k_list, int N,
           double dt, double t_max, int record_every, double tail_tolerance,
           const Vec& c0) {
          SimulationConfig cfg;
          cfg.potential = make_potential(potential, epsilon, delta, static_coeffs);
          if (gauge == "full")
            cfg.gauge = Gauge::Full;
          else if (gauge == "reduced")
            cfg.gauge = Gauge::Reduced;
          else if (gauge == "tilde")
            cfg.gauge = Gauge::Tilde;
          else
            throw std::invalid_argument("unknown gauge: " + gauge);
          cfg.scale = SobolevScale::make(tau, s_list.empty() ? 1.0 : s_list[0]);
          cfg.s_list = s_list;
          cfg.moment_orders = k_list;
          cfg.N = N;
          cfg.dt = dt;
          cfg.t_max = t_max;
          cfg.record_every = record_every;
          cfg.tail_tolerance = tail_tolerance;
          Vec init = c0.size() ? c0 : Vec::Ones(1);
          auto res = evolve(cfg, init);
          py::dict out = series_to_dict(res.series);
          out["final_state"] = res.final_state;
          out["tail_abort"] = res.tail_abort;
          out["final_time"] = res.final_time;
          return out;
        },
        py::arg("potential") = "traveling_wave", py::arg("epsilon") = 1.0,
        py::arg("delta") = 0.0, py::arg("static_coeffs") = Vec(),
        py::arg("gauge") = "reduced", py::arg("tau") = 0.0,
        py::arg("s_list") = std::vector<double>{1.0},
        py::arg("k_list") = std::vector<int>{1}, py::arg("N") = 64,
        py::arg("dt") = 1e-2, py::arg("t_max") = 1.0, py::arg("record_every") = 10,
        py::arg("tail_tolerance") = 1e-6, py::arg("c0") = Vec());

  m.def("oracle_series",
        [](double epsilon, const std::vector<double>& times, double tau,
           const std::vector<int>& k_list, const std::vector<double>& s_list) {
          auto oracle = TravelingWaveOracle::make(epsilon);
          auto s = oracle_norm_series(oracle, times, SobolevScale::make(tau, 1.0),
                                      k_list, s_list);
          return series_to_dict(s);
        },
        py::arg("epsilon"), py::arg("times"), py::arg("tau") = 0.5,
        py::arg("k_list") = std::vector<int>{1},
        py::arg("s_list") = std::vector<double>{1.0});

  m.def("transport_norm",
        [](double max_shift, double t, double tau, double s, double eps) {
          auto p = Profile1D::gaussian(max_shift);
          return transport_norm(p, t, SobolevScale::make(tau, s), eps);
        },
        py::arg("max_shift"), py::arg("t"), py::arg("tau"), py::arg("s"),
        py::arg("eps"));

  m.def("run_selftest",
        [](unsigned seed) {
          py::list out;
          for (const auto& c : run_selftest(seed))
            out.append(py::make_tuple(c.name, c.measured, c.tolerance, c.pass));
          return out;
        },
        py::arg("seed") = 0u);
}
