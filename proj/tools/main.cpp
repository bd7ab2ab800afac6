// Command line front end: simulate / oracle / compare / fit / matrix /
// transport / selftest. JSON config in, CSV out; flags override config
// keys. Exit 0 on success, 1 on a failed check, 2 on usage errors.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "lll/analysis.hpp"
#include "lll/matrices.hpp"
#include "lll/propagator.hpp"
#include "lll/selftest.hpp"
#include "lll/series_io.hpp"
#include "lll/transport.hpp"

using json = nlohmann::json;

namespace {

struct RunConfig {
  double epsilon = 1.0;
  double delta = 0.0;
  double tau = 0.0;
  std::vector<double> s_list = {1.0};
  std::vector<int> k_list = {1};
  int N = 64;
  double dt = 0.01;
  double t_max = 10.0;
  int record_every = 10;
  double tail_tolerance = 1e-6;
  std::string potential_kind = "traveling_wave";
  lll::Vec static_coeffs;
  std::string gauge = "reduced";
  unsigned seed = 0;
  std::string output;
};

void load_config(const std::string& path, RunConfig& rc, const CLI::App& cmd) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  json j = json::parse(in);
  for (const char* key : {"epsilon", "delta", "tau", "s_list", "k_list", "N", "dt",
                          "t_max", "record_every", "tail_tolerance", "potential",
                          "gauge", "output"})
    if (!j.contains(key)) throw std::runtime_error(std::string("config missing ") + key);

  auto flag_unset = [&cmd](const std::string& name) {
    auto* opt = cmd.get_option_no_throw(name);
    return opt == nullptr || opt->count() == 0;
  };
  if (flag_unset("--epsilon")) rc.epsilon = j["epsilon"].get<double>();
  if (flag_unset("--delta")) rc.delta = j["delta"].get<double>();
  if (flag_unset("--tau")) rc.tau = j["tau"].get<double>();
  if (flag_unset("--s-list")) rc.s_list = j["s_list"].get<std::vector<double>>();
  if (flag_unset("--k-list")) rc.k_list = j["k_list"].get<std::vector<int>>();
  if (flag_unset("--N")) rc.N = j["N"].get<int>();
  if (flag_unset("--dt")) rc.dt = j["dt"].get<double>();
  if (flag_unset("--tmax")) rc.t_max = j["t_max"].get<double>();
  if (flag_unset("--record-every")) rc.record_every = j["record_every"].get<int>();
  if (flag_unset("--tail-tol")) rc.tail_tolerance = j["tail_tolerance"].get<double>();
  if (flag_unset("--gauge")) rc.gauge = j["gauge"].get<std::string>();
  if (flag_unset("--seed") && j.contains("seed")) rc.seed = j["seed"].get<unsigned>();
  if (flag_unset("--output")) rc.output = j["output"].get<std::string>();

  const json& pot = j["potential"];
  if (!pot.contains("kind")) throw std::runtime_error("potential.kind missing");
  rc.potential_kind = pot["kind"].get<std::string>();
  if (rc.potential_kind == "static_fock") {
    auto rows = pot["params"]["coeffs"].get<std::vector<std::vector<double>>>();
    rc.static_coeffs.resize(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      rc.static_coeffs[i] = lll::cplx(rows[i][0], rows[i].size() > 1 ? rows[i][1] : 0.0);
  }
}

lll::PotentialSpec make_potential(const RunConfig& rc) {
  if (rc.potential_kind == "traveling_wave")
    return lll::PotentialSpec::traveling_wave(rc.epsilon, rc.delta);
  if (rc.potential_kind == "gaussian_decay")
    return lll::PotentialSpec::gaussian_decay(rc.epsilon);
  if (rc.potential_kind == "static_fock")
    return lll::PotentialSpec::static_fock(rc.static_coeffs);
  throw std::runtime_error("unknown potential kind " + rc.potential_kind);
}

lll::Gauge parse_gauge(const std::string& g) {
  if (g == "full") return lll::Gauge::Full;
  if (g == "reduced") return lll::Gauge::Reduced;
  if (g == "tilde") return lll::Gauge::Tilde;
  throw std::runtime_error("unknown gauge " + g);
}

lll::SimulationConfig make_sim_config(const RunConfig& rc) {
  lll::SimulationConfig cfg;
  cfg.potential = make_potential(rc);
  cfg.gauge = parse_gauge(rc.gauge);
  cfg.scale = lll::SobolevScale::make(rc.tau, rc.s_list.empty() ? 1.0 : rc.s_list[0]);
  cfg.N = rc.N;
  cfg.dt = rc.dt;
  cfg.t_max = rc.t_max;
  cfg.record_every = rc.record_every;
  cfg.tail_tolerance = rc.tail_tolerance;
  cfg.moment_orders = rc.k_list;
  cfg.s_list = rc.s_list;
  return cfg;
}

lll::Vec initial_state(const RunConfig& rc) {
  if (rc.potential_kind == "traveling_wave")
    return lll::TravelingWaveOracle::make(rc.epsilon, rc.delta).initial_coeffs();
  lll::Vec c = lll::Vec::Zero(1);
  c[0] = 1.0;
  return c;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open output " + path);
  return os;
}

std::vector<std::string> seed_comments(const RunConfig& rc) {
  return {"seed " + std::to_string(rc.seed)};
}

void add_common_flags(CLI::App* cmd, RunConfig& rc, std::string& config_path) {
  cmd->add_option("--config", config_path, "JSON config file");
  cmd->add_option("--epsilon", rc.epsilon, "potential strength");
  cmd->add_option("--delta", rc.delta, "detuning");
  cmd->add_option("--tau", rc.tau, "Sobolev scale parameter");
  cmd->add_option("--s-list", rc.s_list, "norm orders s")->delimiter(',');
  cmd->add_option("--k-list", rc.k_list, "moment orders k")->delimiter(',');
  cmd->add_option("--N", rc.N, "truncation size");
  cmd->add_option("--dt", rc.dt, "time step");
  cmd->add_option("--tmax", rc.t_max, "final time");
  cmd->add_option("--record-every", rc.record_every, "recording cadence in steps");
  cmd->add_option("--tail-tol", rc.tail_tolerance, "tail mass abort threshold");
  cmd->add_option("--gauge", rc.gauge, "full | reduced | tilde");
  cmd->add_option("--seed", rc.seed, "random seed");
  cmd->add_option("--output", rc.output, "output CSV path");
  cmd->add_option("--potential", rc.potential_kind,
                  "traveling_wave | gaussian_decay | static_fock");
}

int cmd_simulate(const RunConfig& rc) {
  auto cfg = make_sim_config(rc);
  auto res = lll::evolve(cfg, initial_state(rc));
  if (rc.output.empty()) throw std::runtime_error("simulate requires an output path");
  auto os = open_output(rc.output);
  lll::write_series_csv(os, res.series, seed_comments(rc));
  auto state_os = open_output(rc.output + ".state.csv");
  lll::write_matrix_csv(state_os, res.final_state);
  if (res.tail_abort) {
    std::cout << "tail mass exceeded tolerance at t = " << res.final_time << "\n";
    return 1;
  }
  std::cout << "wrote " << res.series.rows() << " rows to " << rc.output << "\n";
  return 0;
}

int cmd_oracle(const RunConfig& rc, double t_min) {
  auto oracle = lll::TravelingWaveOracle::make(rc.epsilon, rc.delta);
  std::vector<double> times;
  const double step = rc.dt * rc.record_every;
  for (double t = t_min; t <= rc.t_max + 1e-12; t += step) times.push_back(t);
  auto series = lll::oracle_norm_series(oracle, times,
                                        lll::SobolevScale::make(rc.tau, 1.0), rc.k_list,
                                        rc.s_list);
  if (rc.output.empty()) throw std::runtime_error("oracle requires an output path");
  auto os = open_output(rc.output);
  lll::write_series_csv(os, series, seed_comments(rc));
  std::cout << "wrote " << series.rows() << " rows to " << rc.output << "\n";
  return 0;
}

int cmd_compare(const RunConfig& rc, double tol) {
  RunConfig local = rc;
  local.potential_kind = "traveling_wave";
  auto cfg = make_sim_config(local);
  cfg.gauge = lll::Gauge::Reduced;
  cfg.keep_states = true;
  auto res = lll::evolve(cfg, initial_state(local));
  auto oracle = lll::TravelingWaveOracle::make(local.epsilon, local.delta);
  const double err = lll::compare_to_oracle(res.states, oracle);
  std::printf("max l2 error vs oracle: %.6e (tolerance %.1e)\n", err, tol);
  return err <= tol ? 0 : 1;
}

int cmd_fit(const std::string& input, const std::string& column,
            const std::pair<double, double>& window) {
  std::ifstream is(input);
  if (!is) throw std::runtime_error("cannot open " + input);
  auto cols = lll::read_csv_columns(is);
  if (!cols.count("t") || !cols.count(column))
    throw std::runtime_error("column not found: " + column);
  auto fit = lll::fit_slope(cols["t"], cols[column], window.first, window.second);
  std::printf("slope %.6f stderr %.6f samples %d\n", fit.slope, fit.slope_err,
              fit.samples);
  return 0;
}

int cmd_matrix(const RunConfig& rc, double t) {
  auto pot = make_potential(rc);
  lll::Mat M;
  const int N = rc.N;
  if (pot.kind == lll::PotentialKind::TravelingWave) {
    const lll::cplx beta = pot.drift() * t;
    if (parse_gauge(rc.gauge) == lll::Gauge::Tilde)
      M = lll::ltilde_matrix(t, lll::SobolevScale::make(rc.tau, 1.0), pot.base_coeffs(),
                             pot.drift(), N);
    else
      M = lll::conjugated_generator(pot.base_coeffs(), beta, -2.0 * rc.delta * t, N);
  } else if (pot.kind == lll::PotentialKind::StaticFock) {
    M = lll::potential_matrix(pot.static_coeffs, N);
  } else {
    M = lll::Mat::Zero(N, N);
    const double g = rc.epsilon * 0.5 * (1.0 + std::cos(t));
    for (int n = 0; n < N; ++n) M(n, n) = g * std::pow(0.5, n + 1);
  }
  if (rc.output.empty()) {
    lll::write_matrix_csv(std::cout, M);
  } else {
    auto os = open_output(rc.output);
    lll::write_matrix_csv(os, M);
  }
  return 0;
}

int cmd_transport(double tau, double s, double eps, double t_min, double t_max,
                  int samples, const std::string& output) {
  auto scale = lll::SobolevScale::make(tau, s);
  auto profile = lll::Profile1D::gaussian(eps * t_max);
  std::vector<double> times;
  for (int i = 0; i < samples; ++i)
    times.push_back(t_min + (t_max - t_min) * i / (samples - 1.0));
  auto growth = lll::transport_growth_check(profile, scale, eps, times, t_min, t_max);
  const double target = scale.rho * s;
  std::printf("slope %.6f (target %.6f) stderr %.6f c_lower %.6f c_upper %.6f\n",
              growth.slope, target, growth.slope_err, growth.c_lower, growth.c_upper);
  if (!output.empty()) {
    auto os = open_output(output);
    os << "t,norm\n";
    for (double t : times)
      os << lll::format_double(t) << ","
         << lll::format_double(lll::transport_norm(profile, t, scale, eps)) << "\n";
  }
  return growth.bounds_pass ? 0 : 1;
}

int cmd_selftest(unsigned seed) {
  auto results = lll::run_selftest(seed);
  std::printf("seed %u\n", seed);
  std::printf("%-28s %14s %12s  %s\n", "check", "measured", "tolerance", "verdict");
  for (const auto& r : results)
    std::printf("%-28s %14.6e %12.1e  %s\n", r.name.c_str(), r.measured, r.tolerance,
                r.pass ? "pass" : "FAIL");
  return lll::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral simulator for the lowest Landau level equation"};
  app.require_subcommand(1);

  RunConfig rc;
  std::string config_path;
  double t_min = 0.0, mat_time = 0.0, tol = 1e-3;
  std::string fit_input, fit_column;
  std::pair<double, double> window{0.0, 1.0};
  double tr_tau = 0.0, tr_s = 2.0, tr_eps = 0.5, tr_tmin = 40.0, tr_tmax = 400.0;
  int tr_samples = 100;
  std::string tr_output;

  auto* simulate = app.add_subcommand("simulate", "integrate and record norms");
  add_common_flags(simulate, rc, config_path);

  auto* oracle = app.add_subcommand("oracle", "closed-form norm series");
  add_common_flags(oracle, rc, config_path);
  oracle->add_option("--tmin", t_min, "first sample time");

  auto* compare = app.add_subcommand("compare", "simulation vs closed form");
  add_common_flags(compare, rc, config_path);
  compare->add_option("--tol", tol, "acceptance threshold");

  auto* fit = app.add_subcommand("fit", "log-log slope of a CSV column");
  fit->add_option("--input", fit_input, "series CSV")->required();
  fit->add_option("--column", fit_column, "column name")->required();
  fit->add_option("--window", window, "t_min,t_max")->delimiter(',')->required();

  auto* matrix = app.add_subcommand("matrix", "dump a generator matrix");
  add_common_flags(matrix, rc, config_path);
  matrix->add_option("--time", mat_time, "assembly time");

  auto* transport = app.add_subcommand("transport", "free transport growth demo");
  transport->add_option("--tau", tr_tau, "scale parameter");
  transport->add_option("--s", tr_s, "norm order");
  transport->add_option("--epsilon", tr_eps, "drift speed");
  transport->add_option("--tmin", tr_tmin, "fit window start");
  transport->add_option("--tmax", tr_tmax, "fit window end");
  transport->add_option("--samples", tr_samples, "number of samples");
  transport->add_option("--output", tr_output, "optional t,norm CSV");

  auto* selftest = app.add_subcommand("selftest", "invariant battery");
  selftest->add_option("--seed", rc.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    CLI::App* cmd = app.get_subcommands().front();
    if (!config_path.empty()) load_config(config_path, rc, *cmd);

    if (cmd == simulate) return cmd_simulate(rc);
    if (cmd == oracle) return cmd_oracle(rc, t_min);
    if (cmd == compare) {
      if (compare->get_option("--N")->count() == 0 && config_path.empty()) rc.N = 128;
      if (compare->get_option("--dt")->count() == 0 && config_path.empty()) rc.dt = 5e-3;
      if (compare->get_option("--tmax")->count() == 0 && config_path.empty())
        rc.t_max = 50.0;
      return cmd_compare(rc, tol);
    }
    if (cmd == fit) return cmd_fit(fit_input, fit_column, window);
    if (cmd == matrix) return cmd_matrix(rc, mat_time);
    if (cmd == transport)
      return cmd_transport(tr_tau, tr_s, tr_eps, tr_tmin, tr_tmax, tr_samples,
                           tr_output);
    if (cmd == selftest) return cmd_selftest(rc.seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
