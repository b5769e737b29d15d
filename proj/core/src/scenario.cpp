#include "qcorr/scenario.hpp"

#include "qcorr/closedform.hpp"
#include "qcorr/parallel.hpp"
#include "qcorr/unravel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qcorr {

namespace {

// Path landmarks that must land on exact coordinates in every scan grid.
constexpr double kPinnedS[] = {0.0, 2.0 / 7.0, 6.0 / 7.0, 1.0};

void require_gamma(const ScenarioConfig& cfg) {
  if (!(cfg.gamma > 0.0) || !std::isfinite(cfg.gamma)) {
    throw InvalidCorrelationError("scenario: gamma must be positive and finite");
  }
}

bool is_landmark(const std::string& label) {
  return label == "P" || label == "Q" || label == "R" || label == "S" || label == "O";
}

void check_common(const ScenarioConfig& cfg) {
  require_gamma(cfg);
  if (!std::isfinite(cfg.omega)) {
    throw std::invalid_argument("scenario: omega must be finite");
  }
  if (cfg.state == StateFamily::Ghzw && !(cfg.p >= 0.0 && cfg.p <= 1.0)) {
    throw std::invalid_argument("scenario: superposition weight p must lie in [0, 1]");
  }
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) {
    throw std::invalid_argument("scenario: dt must be positive and finite");
  }
  if (cfg.method == Method::ClosedForm && cfg.channel != NoiseChannel::Dephasing) {
    throw std::invalid_argument("scenario: the closed form is only available for the dephasing channel");
  }
  if (cfg.method == Method::Trajectories && cfg.n_traj < 1) {
    throw std::invalid_argument("scenario: n_traj must be at least 1");
  }
}

CorrelationSpec spec_for(const ScanCell& cell, double gamma) {
  PathPoint point;
  point.s = cell.axis;
  point.coords = cell.coords;
  return correlation_at(point, gamma);
}

SystemConfig system_for(const ScenarioConfig& cfg) {
  SystemConfig sys;
  sys.n_qubits = 3;
  sys.omega = cfg.omega;
  return sys;
}

// One cell's negativity reports on the configured time grid.
std::vector<NegativityReport> evaluate_cell(const ScenarioConfig& cfg, const ComplexMatrix& rho0,
                                            const ScanCell& cell, const std::vector<double>& times,
                                            std::uint64_t cell_seed) {
  const CorrelationSpec spec = spec_for(cell, cfg.gamma);
  const SystemConfig sys = system_for(cfg);

  std::vector<NegativityReport> row;
  row.reserve(times.size());

  switch (cfg.method) {
    case Method::Master: {
      EvolutionProblem problem;
      problem.sys = sys;
      problem.channel = cfg.channel;
      problem.corr = spec;
      problem.rho0 = rho0;
      problem.t_max = times.back();
      problem.dt = cfg.dt;
      const Trajectory traj = integrate(problem, times);
      for (std::size_t k = 0; k < traj.states.size(); ++k) {
        row.push_back(full_report(traj.states[k], traj.times[k]));
      }
      break;
    }
    case Method::ClosedForm: {
      require_valid(spec);
      for (double t : times) {
        row.push_back(full_report(evolve_dephasing(rho0, sys, spec, t), t));
      }
      break;
    }
    case Method::Trajectories: {
      EvolutionProblem problem;
      problem.sys = sys;
      problem.channel = cfg.channel;
      problem.corr = spec;
      problem.rho0 = rho0;
      problem.t_max = times.back();
      problem.dt = cfg.dt;
      const std::vector<ComplexMatrix> series =
          ensemble_series(problem, cfg.n_traj, cell_seed, times, cfg.workers);
      for (std::size_t k = 0; k < series.size(); ++k) {
        row.push_back(full_report(series[k], times[k]));
      }
      break;
    }
  }
  return row;
}

}  // namespace

ComplexMatrix initial_state(const ScenarioConfig& cfg) {
  switch (cfg.state) {
    case StateFamily::Ghz:
      return ghz_state();
    case StateFamily::W:
      return w_state();
    case StateFamily::Ghzw: {
      SuperpositionSpec mix;
      mix.p = cfg.p;
      return ghzw_superposition(mix);
    }
  }
  throw std::invalid_argument("scenario: unknown state family");
}

std::vector<ScanCell> scan_cells(const ScenarioConfig& cfg) {
  require_gamma(cfg);
  const int sources = (cfg.corr.has_value() ? 1 : 0) + (cfg.points.empty() ? 0 : 1) +
                      (cfg.path_samples > 0 ? 1 : 0);
  if (sources > 1) {
    throw std::invalid_argument(
        "scenario: corr, points, and path_samples are mutually exclusive");
  }

  std::vector<ScanCell> cells;

  if (cfg.path_samples > 0) {
    if (cfg.path_samples < 2) {
      throw std::invalid_argument("scenario: path scans need at least 2 samples");
    }
    // Uniform grid plus the pinned landmark values; pinned values win ties so
    // P, Q, R, S rows carry exact coordinates.
    std::vector<double> svals(kPinnedS, kPinnedS + 4);
    for (double s : linspace(0.0, 1.0, cfg.path_samples)) {
      bool near_pinned = false;
      for (double pin : kPinnedS) near_pinned = near_pinned || std::abs(s - pin) < 1e-12;
      if (!near_pinned) svals.push_back(s);
    }
    std::sort(svals.begin(), svals.end());
    cells.reserve(svals.size());
    for (double s : svals) {
      const PathPoint point = path_pqrs(s);
      ScanCell cell;
      cell.axis = point.s;
      cell.coords = point.coords;
      cell.label = point_label(point.coords);
      cells.push_back(cell);
    }
    return cells;
  }

  if (!cfg.points.empty()) {
    cells.reserve(cfg.points.size());
    for (std::size_t i = 0; i < cfg.points.size(); ++i) {
      const auto& [label, triple] = cfg.points[i];
      ScanCell cell;
      cell.axis = static_cast<double>(i);
      // Landmark labels carry path coordinates (multiples of gamma); bare
      // numeric triples are absolute rates and are rescaled for display.
      if (is_landmark(label)) {
        cell.coords = triple;
      } else {
        cell.coords = {triple[0] / cfg.gamma, triple[1] / cfg.gamma, triple[2] / cfg.gamma};
      }
      cell.label = label.empty() ? point_label(cell.coords) : label;
      cells.push_back(cell);
    }
    return cells;
  }

  ScanCell cell;
  cell.axis = 0.0;
  if (cfg.corr.has_value()) {
    const std::array<double, 3>& raw = *cfg.corr;
    cell.coords = {raw[0] / cfg.gamma, raw[1] / cfg.gamma, raw[2] / cfg.gamma};
  } else {
    cell.coords = {0.0, 0.0, 0.0};
  }
  cell.label = point_label(cell.coords);
  cells.push_back(cell);
  return cells;
}

ScanResult run_scenario(const ScenarioConfig& cfg) {
  check_common(cfg);
  if (cfg.time_samples < 2) {
    throw std::invalid_argument("scenario: time_samples must be at least 2");
  }
  if (!(cfg.t_max > 0.0) || !std::isfinite(cfg.t_max)) {
    throw std::invalid_argument("scenario: t_max must be positive and finite");
  }

  ScanResult result;
  result.axis_name = cfg.path_samples > 0 ? "s" : "idx";
  result.cells = scan_cells(cfg);
  result.times = linspace(0.0, cfg.t_max, cfg.time_samples);
  result.grid.resize(result.cells.size());

  const ComplexMatrix rho0 = initial_state(cfg);

  auto run_cell = [&](std::size_t ci) {
    // A lone cell uses the scenario seed directly, so single-point ensemble
    // runs reproduce direct library calls with the same seed; multi-cell
    // scans derive disjoint per-cell streams.
    const std::uint64_t cell_seed =
        result.cells.size() == 1 ? cfg.seed : trajectory_seed(cfg.seed, 1000000 + ci);
    result.grid[ci] = evaluate_cell(cfg, rho0, result.cells[ci], result.times, cell_seed);
  };

  if (cfg.method == Method::Trajectories) {
    // Ensembles parallelize internally; keep cells sequential so worker
    // counts compose predictably.
    for (std::size_t ci = 0; ci < result.cells.size(); ++ci) run_cell(ci);
  } else {
    parallel_for(result.cells.size(), cfg.workers, run_cell);
  }
  return result;
}

ScanResult run_superposition_scan(const ScenarioConfig& cfg, const std::vector<double>& p_grid,
                                  double t_eval) {
  check_common(cfg);
  if (p_grid.empty()) {
    throw std::invalid_argument("scenario: superposition scan needs a non-empty p grid");
  }
  for (double p : p_grid) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("scenario: superposition weights must lie in [0, 1]");
    }
  }
  if (!(t_eval >= 0.0) || !std::isfinite(t_eval)) {
    throw std::invalid_argument("scenario: t_eval must be non-negative and finite");
  }

  const std::vector<ScanCell> corr_cells = scan_cells(cfg);

  ScanResult result;
  result.axis_name = "p";
  result.times = {t_eval};
  result.cells.reserve(corr_cells.size() * p_grid.size());
  for (const ScanCell& corr_cell : corr_cells) {
    for (double p : p_grid) {
      ScanCell cell;
      cell.axis = p;
      cell.coords = corr_cell.coords;
      cell.label = corr_cell.label;
      result.cells.push_back(cell);
    }
  }
  result.grid.resize(result.cells.size());

  auto run_pair = [&](std::size_t idx) {
    ScenarioConfig local = cfg;
    local.state = StateFamily::Ghzw;
    local.p = result.cells[idx].axis;
    const ComplexMatrix rho0 = initial_state(local);
    const std::uint64_t pair_seed = trajectory_seed(cfg.seed, 2000000 + idx);
    // t_eval == 0 still needs a one-point "evolution"; the closed form and
    // integrator both accept t = 0 directly.
    result.grid[idx] =
        evaluate_cell(local, rho0, result.cells[idx], std::vector<double>{t_eval}, pair_seed);
  };

  if (cfg.method == Method::Trajectories) {
    for (std::size_t idx = 0; idx < result.cells.size(); ++idx) run_pair(idx);
  } else {
    parallel_for(result.cells.size(), cfg.workers, run_pair);
  }
  return result;
}

}  // namespace qcorr
