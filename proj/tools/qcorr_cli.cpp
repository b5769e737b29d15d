// qcorr: correlated-noise simulator for three-qubit entanglement decay.
//
// Subcommands map onto the library's scan kinds; every flag mirrors a config
// key, so `--config file` plus flag overrides and pure-flag invocations go
// through the same parser and validation.
//
// Exit codes: 0 success, 2 invalid correlation spec, 3 configuration error,
// 4 I/O failure.

#include "qcorr/config.hpp"
#include "qcorr/unravel.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct ScanArgs {
  std::string config;
  std::map<std::string, std::string> overrides;  // config key -> raw flag text
};

// Every scan flag is captured as raw text under its config key; merging then
// reuses the config parser verbatim.
void add_scan_flags(CLI::App* cmd, const std::shared_ptr<ScanArgs>& args) {
  cmd->add_option("--config", args->config, "config file; explicit flags override its keys");
  auto bind = [cmd, args](const std::string& flag, const std::string& key,
                          const std::string& help) {
    cmd->add_option_function<std::string>(
        flag, [args, key](const std::string& v) { args->overrides[key] = v; }, help);
  };
  bind("--state", "state", "initial state: ghz | w | ghzw:<p>");
  bind("--channel", "channel", "noise channel: dephasing | amplitude");
  bind("--gamma", "gamma", "local noise rate (default 1)");
  bind("--omega", "omega", "level splitting of H_sys (default 0)");
  bind("--corr", "corr", "cross-correlation rates G_AB,G_AC,G_BC (absolute)");
  bind("--points", "points", "correlation points: landmark names and/or triples, ';'-separated");
  bind("--path-samples", "path_samples", "uniform samples along the PQRS path");
  bind("--tmax", "t_max", "evolution horizon in units of 1/gamma");
  bind("--dt", "dt", "integrator step (default 1e-3)");
  bind("--time-samples", "time_samples", "report grid size over [0, tmax]");
  bind("--method", "method", "evolution method: master | closedform | traj");
  bind("--ntraj", "n_traj", "trajectories per ensemble (method traj)");
  bind("--seed", "seed", "master seed for stochastic runs");
  bind("--p-samples", "p_samples", "superposition weight grid size");
  bind("--t-eval", "t_eval", "superposition scan evaluation time");
  bind("--workers", "workers", "worker threads (0 = hardware concurrency)");
  bind("--csv", "csv", "CSV output path");
  bind("--svg", "svg", "SVG output path");
  bind("--svg-kind", "svg_kind", "chart kind: lines | heatmap");
  bind("--plot", "plot", "lines content: tri | bipartitions | pairwise");
  bind("--title", "title", "chart title");
}

qcorr::ConfigMap merged_map(const ScanArgs& args, const char* forced_scan,
                            const char* default_path_samples) {
  qcorr::ConfigMap map;
  if (!args.config.empty()) map = qcorr::load_config(args.config);
  for (const auto& [key, value] : args.overrides) map[key] = value;
  if (forced_scan != nullptr) map["scan"] = forced_scan;
  if (default_path_samples != nullptr && map.find("path_samples") == map.end()) {
    map["path_samples"] = default_path_samples;
  }
  return map;
}

int run_scan(const ScanArgs& args, const char* forced_scan, const char* default_path_samples) {
  const qcorr::RunSpec spec =
      qcorr::run_spec_from_config(merged_map(args, forced_scan, default_path_samples));
  const qcorr::ScanResult result = qcorr::execute_run(spec);
  std::cout << "cells = " << result.cells.size() << ", samples = " << result.times.size() << "\n";
  if (!spec.csv.empty()) std::cout << "wrote " << spec.csv << "\n";
  if (!spec.svg.empty()) std::cout << "wrote " << spec.svg << "\n";
  return 0;
}

int run_validate(double gamma, const std::string& corr_text) {
  const std::array<double, 3> t = qcorr::parse_triple("corr", corr_text);
  qcorr::CorrelationSpec spec;
  spec.gamma = gamma;
  spec.gamma_ab = t[0];
  spec.gamma_ac = t[1];
  spec.gamma_bc = t[2];
  std::cout << "psd_value = " << qcorr::format_value(qcorr::psd_value(spec)) << "\n";
  const bool ok = qcorr::is_valid(spec);
  std::cout << "valid = " << (ok ? "yes" : "no") << "\n";
  return ok ? 0 : 2;
}

int run_trajectories(const ScanArgs& args) {
  const qcorr::RunSpec spec = qcorr::run_spec_from_config(merged_map(args, "point", nullptr));
  const qcorr::ScenarioConfig& cfg = spec.scenario;

  const std::vector<qcorr::ScanCell> cells = qcorr::scan_cells(cfg);
  if (cells.size() != 1) {
    throw std::invalid_argument("trajectories: needs exactly one correlation point");
  }
  qcorr::PathPoint point;
  point.s = cells.front().axis;
  point.coords = cells.front().coords;

  qcorr::EvolutionProblem problem;
  problem.sys.n_qubits = 3;
  problem.sys.omega = cfg.omega;
  problem.channel = cfg.channel;
  problem.corr = qcorr::correlation_at(point, cfg.gamma);
  problem.rho0 = qcorr::initial_state(cfg);
  problem.t_max = cfg.t_max;
  problem.dt = cfg.dt;

  const qcorr::EnsembleResult ens =
      qcorr::ensemble_average(problem, cfg.n_traj, cfg.seed, cfg.t_max, cfg.workers);
  const qcorr::Trajectory master = qcorr::integrate(problem, {cfg.t_max});
  const qcorr::NegativityReport report = qcorr::full_report(ens.mean_rho, ens.t_sample);

  std::cout << "n_traj = " << ens.n_trajectories << "\n";
  std::cout << "seed = " << ens.seed << "\n";
  std::cout << "t_sample = " << qcorr::format_value(ens.t_sample) << "\n";
  std::cout << "frobenius_error = "
            << qcorr::format_value(qcorr::frobenius_distance(ens.mean_rho, master.states.back()))
            << "\n";
  std::cout << "standard_error = " << qcorr::format_value(ens.standard_error) << "\n";
  std::cout << "N_ABC = " << qcorr::format_value(report.n_tri) << "\n";
  return 0;
}

int run_reproduce(const std::string& target, const fs::path& configs_dir,
                  const fs::path& out_dir) {
  if (!fs::exists(configs_dir)) {
    throw qcorr::IoError("configs directory " + configs_dir.string() + " does not exist");
  }

  std::vector<fs::path> matches;
  try {
    for (const auto& entry : fs::directory_iterator(configs_dir)) {
      if (!entry.is_regular_file()) continue;
      const std::string name = entry.path().filename().string();
      if (name.rfind(target, 0) == 0 && entry.path().extension() == ".conf") {
        matches.push_back(entry.path());
      }
    }
  } catch (const fs::filesystem_error& e) {
    throw qcorr::IoError("cannot list " + configs_dir.string() + ": " + e.what());
  }
  if (matches.empty()) {
    throw std::invalid_argument("reproduce: no config in " + configs_dir.string() +
                                " matches '" + target + "'");
  }
  std::sort(matches.begin(), matches.end());

  for (const fs::path& conf : matches) {
    qcorr::RunSpec spec = qcorr::run_spec_from_config(qcorr::load_config(conf));
    if (!spec.csv.empty()) spec.csv = (out_dir / spec.csv).string();
    if (!spec.svg.empty()) spec.svg = (out_dir / spec.svg).string();
    std::cout << "running " << conf.filename().string() << "\n";
    qcorr::execute_run(spec);
    if (!spec.csv.empty()) std::cout << "wrote " << spec.csv << "\n";
    if (!spec.svg.empty()) std::cout << "wrote " << spec.svg << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"three-qubit entanglement decay under correlated Markov noise"};
  app.set_version_flag("--version", "qcorr 0.1.0");
  app.require_subcommand(1);

  int exit_code = 0;

  auto sim_args = std::make_shared<ScanArgs>();
  CLI::App* simulate = app.add_subcommand("simulate", "evolve at explicit correlation point(s)");
  add_scan_flags(simulate, sim_args);
  simulate->callback([&, sim_args] { exit_code = run_scan(*sim_args, nullptr, nullptr); });

  auto path_args = std::make_shared<ScanArgs>();
  CLI::App* scan_path = app.add_subcommand("scan-path", "sweep the PQRS correlation path");
  add_scan_flags(scan_path, path_args);
  scan_path->callback([&, path_args] { exit_code = run_scan(*path_args, "path", "29"); });

  auto super_args = std::make_shared<ScanArgs>();
  CLI::App* scan_super =
      app.add_subcommand("scan-superposition", "sweep the GHZ-W superposition weight");
  add_scan_flags(scan_super, super_args);
  scan_super->callback(
      [&, super_args] { exit_code = run_scan(*super_args, "superposition", nullptr); });

  double vc_gamma = 1.0;
  std::string vc_corr;
  CLI::App* validate = app.add_subcommand("validate-corr", "check a correlation spec against the PSD constraint");
  validate->add_option("--gamma", vc_gamma, "local noise rate (default 1)");
  validate->add_option("--corr", vc_corr, "cross-correlation rates G_AB,G_AC,G_BC")->required();
  validate->callback([&] { exit_code = run_validate(vc_gamma, vc_corr); });

  auto traj_args = std::make_shared<ScanArgs>();
  CLI::App* traj = app.add_subcommand(
      "trajectories", "stochastic ensemble vs master equation at one correlation point");
  add_scan_flags(traj, traj_args);
  traj->callback([&, traj_args] { exit_code = run_trajectories(*traj_args); });

  std::string target;
  std::string configs_dir = "configs";
  std::string out_dir = "out";
  CLI::App* reproduce = app.add_subcommand("reproduce", "run the bundled figure configs");
  reproduce->add_option("figure", target, "config prefix, e.g. fig3 .. fig9")->required();
  reproduce->add_option("--configs-dir", configs_dir, "directory holding *.conf (default configs)");
  reproduce->add_option("--out-dir", out_dir, "output directory (default out)");
  reproduce->callback([&] { exit_code = run_reproduce(target, configs_dir, out_dir); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (dynamic_cast<const CLI::CallForHelp*>(&e) != nullptr ||
        dynamic_cast<const CLI::CallForAllHelp*>(&e) != nullptr ||
        dynamic_cast<const CLI::CallForVersion*>(&e) != nullptr) {
      return code;
    }
    return 3;
  } catch (const qcorr::InvalidCorrelationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qcorr::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}
