#pragma once

#include "qcorr/entangle.hpp"
#include "qcorr/liouville.hpp"
#include "qcorr/noise.hpp"
#include "qcorr/states.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qcorr {

enum class Method { Master, ClosedForm, Trajectories };
enum class StateFamily { Ghz, W, Ghzw };

// One reproducible scenario: initial state, channel, correlation point(s) or
// path, time grid, and evolution method.  Correlation triples are absolute
// rates (same units as gamma); path coordinates are multiples of gamma.
struct ScenarioConfig {
  StateFamily state = StateFamily::Ghz;
  double p = 1.0;  // ghzw mixing weight (p = 0 W, p = 1 GHZ)
  NoiseChannel channel = NoiseChannel::Dephasing;
  double gamma = 1.0;
  double omega = 0.0;

  // Exactly one correlation source: an explicit point (empty -> uncorrelated
  // (0,0,0)), a list of labeled points, or a path scan with path_samples > 0.
  std::optional<std::array<double, 3>> corr;
  std::vector<std::pair<std::string, std::array<double, 3>>> points;  // label may be ""
  int path_samples = 0;

  double t_max = 2.0;
  double dt = 1e-3;
  int time_samples = 201;

  Method method = Method::Master;
  int n_traj = 2000;
  std::uint64_t seed = 1;

  int p_samples = 41;    // superposition scans
  double t_eval = 10.0;  // superposition evaluation time

  unsigned workers = 0;  // 0 -> hardware concurrency
};

// One correlation cell of a scan: its axis value (s along the path, the
// mixing weight p, or the list index for explicit point sets), coordinates
// in units of gamma, and a landmark label when it sits on P/Q/R/S/O.
struct ScanCell {
  double axis = 0.0;
  std::array<double, 3> coords{};
  std::string label;
};

// Dense result grid: one NegativityReport per (cell, time).
struct ScanResult {
  std::string title;
  std::string axis_name;  // "s", "p", or "idx"
  std::vector<ScanCell> cells;
  std::vector<double> times;
  std::vector<std::vector<NegativityReport>> grid;  // [cell][time]
};

// Initial density matrix for the configured state family.
ComplexMatrix initial_state(const ScenarioConfig& cfg);

// The correlation cells a config describes.  Path scans sample s uniformly
// and always pin the named values {0, 2/7, 6/7, 1}, so P, Q, R, S rows carry
// exact coordinates.
std::vector<ScanCell> scan_cells(const ScenarioConfig& cfg);

// Evolves the configured state over every correlation cell and reports all
// negativities on the time grid linspace(0, t_max, time_samples).  Cells run
// on a bounded worker pool.  method == ClosedForm is exact and only valid
// for the dephasing channel; method == Trajectories averages n_traj
// stochastic trajectories per cell (deterministic in seed).
ScanResult run_scenario(const ScenarioConfig& cfg);

// Tripartite negativity at t_eval for every (correlation cell, p) pair,
// p_grid in [0, 1].  Axis is p; cells are grouped per correlation point.
ScanResult run_superposition_scan(const ScenarioConfig& cfg, const std::vector<double>& p_grid,
                                  double t_eval);

}  // namespace qcorr
