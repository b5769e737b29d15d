#include "qcorr/scenario.hpp"

#include "qcorr/closedform.hpp"
#include "qcorr/entangle.hpp"
#include "qcorr/matrix.hpp"
#include "qcorr/noise.hpp"
#include "qcorr/states.hpp"

#include <doctest.h>

#include <array>
#include <cmath>
#include <stdexcept>

using namespace qcorr;

namespace {

constexpr double kTwoRootTwoThirds = 0.9428090415820634;  // 2*sqrt(2)/3

ScenarioConfig base_config() {
  ScenarioConfig cfg;
  cfg.t_max = 1.0;
  cfg.time_samples = 5;
  cfg.workers = 1;
  return cfg;
}

}  // namespace

TEST_CASE("scan_cells samples the path and pins the landmarks") {
  ScenarioConfig cfg = base_config();
  cfg.path_samples = 7;  // uniform 7 + pinned {0, 2/7, 6/7, 1} -> 9 distinct
  const auto cells = scan_cells(cfg);
  REQUIRE(cells.size() == 9);
  CHECK(cells.front().label == "P");
  CHECK(cells.back().label == "S");
  int labeled = 0;
  for (const auto& cell : cells) {
    if (!cell.label.empty()) ++labeled;
    CHECK(is_valid(correlation_at(PathPoint{cell.axis, cell.coords}, cfg.gamma)));
  }
  CHECK(labeled == 4);
  // Q and R carry exact coordinates at the pinned s values.
  bool saw_q = false, saw_r = false;
  for (const auto& cell : cells) {
    if (cell.label == "Q") {
      saw_q = true;
      CHECK(cell.axis == 2.0 / 7.0);
      CHECK(cell.coords == std::array<double, 3>{1.0, 1.0, 1.0});
    }
    if (cell.label == "R") {
      saw_r = true;
      CHECK(cell.axis == 6.0 / 7.0);
      CHECK(cell.coords == std::array<double, 3>{-1.0, -1.0, 1.0});
    }
  }
  CHECK(saw_q);
  CHECK(saw_r);
  // Axis strictly ascending.
  for (std::size_t i = 1; i < cells.size(); ++i) CHECK(cells[i].axis > cells[i - 1].axis);
}

TEST_CASE("scan_cells enforces one correlation source and defaults to O") {
  ScenarioConfig cfg = base_config();
  const auto cells = scan_cells(cfg);
  REQUIRE(cells.size() == 1);
  CHECK(cells.front().label == "O");
  CHECK(cells.front().coords == std::array<double, 3>{0.0, 0.0, 0.0});

  cfg.corr = std::array<double, 3>{0.5, 0.5, 0.5};
  cfg.path_samples = 5;
  CHECK_THROWS_AS(scan_cells(cfg), std::invalid_argument);

  cfg.path_samples = 0;
  cfg.points = {{"Q", named_point("Q")}};
  CHECK_THROWS_AS(scan_cells(cfg), std::invalid_argument);

  ScenarioConfig one = base_config();
  one.path_samples = 1;
  CHECK_THROWS_AS(scan_cells(one), std::invalid_argument);
}

TEST_CASE("explicit correlation triples are converted to gamma multiples") {
  ScenarioConfig cfg = base_config();
  cfg.gamma = 2.0;
  cfg.corr = std::array<double, 3>{2.0, 2.0, 2.0};  // absolute rates
  const auto cells = scan_cells(cfg);
  REQUIRE(cells.size() == 1);
  CHECK(cells.front().coords == std::array<double, 3>{1.0, 1.0, 1.0});
  CHECK(cells.front().label == "Q");
}

TEST_CASE("closed-form scenario reproduces the GHZ decay at Q") {
  ScenarioConfig cfg = base_config();
  cfg.method = Method::ClosedForm;
  cfg.points = {{"Q", named_point("Q")}};
  const ScanResult res = run_scenario(cfg);
  REQUIRE(res.cells.size() == 1);
  REQUIRE(res.times.size() == 5);
  CHECK(res.axis_name == "idx");
  for (std::size_t ti = 0; ti < res.times.size(); ++ti) {
    const double expected = std::exp(-18.0 * res.times[ti]);
    CHECK(res.grid[0][ti].n_tri == doctest::Approx(expected).epsilon(1e-12));
    CHECK(res.grid[0][ti].t == res.times[ti]);
  }
}

TEST_CASE("master and closed-form methods agree for W dephasing at P") {
  ScenarioConfig cfg = base_config();
  cfg.state = StateFamily::W;
  cfg.points = {{"P", named_point("P")}};

  cfg.method = Method::Master;
  const ScanResult master = run_scenario(cfg);
  cfg.method = Method::ClosedForm;
  const ScanResult closed = run_scenario(cfg);

  for (std::size_t ti = 0; ti < master.times.size(); ++ti) {
    const auto& m = master.grid[0][ti];
    const auto& c = closed.grid[0][ti];
    CHECK(m.n_tri == doctest::Approx(c.n_tri).epsilon(1e-6));
    for (int q = 0; q < 3; ++q) {
      CHECK(m.n_bipart[q] == doctest::Approx(c.n_bipart[q]).epsilon(1e-6));
    }
  }
}

TEST_CASE("the ghzw superposition family flows through the scenario driver") {
  ScenarioConfig cfg = base_config();
  cfg.state = StateFamily::Ghzw;
  cfg.p = 0.5;
  cfg.corr = std::array<double, 3>{0.3, 0.3, -0.2};
  cfg.method = Method::Master;
  const ScanResult res = run_scenario(cfg);

  SuperpositionSpec mix;
  mix.p = 0.5;
  const CorrelationSpec corr = correlation_at(PathPoint{0.0, {0.3, 0.3, -0.2}}, 1.0);
  SystemConfig sys;
  for (std::size_t ti = 0; ti < res.times.size(); ++ti) {
    const ComplexMatrix exact =
        evolve_dephasing(ghzw_superposition(mix), sys, corr, res.times[ti]);
    CHECK(res.grid[0][ti].n_tri ==
          doctest::Approx(tripartite_negativity(exact)).epsilon(1e-8));
  }
}

TEST_CASE("trajectory scenarios stay close to the master solution") {
  ScenarioConfig cfg = base_config();
  cfg.channel = NoiseChannel::Dephasing;
  cfg.points = {{"Q", named_point("Q")}};
  cfg.t_max = 0.5;
  cfg.time_samples = 2;
  cfg.method = Method::Trajectories;
  cfg.n_traj = 64;
  cfg.seed = 4242;
  const ScanResult traj = run_scenario(cfg);

  cfg.method = Method::Master;
  const ScanResult master = run_scenario(cfg);
  // GHZ at Q, t = 0.5: exact value exp(-9) is tiny; the Monte Carlo estimate
  // must land within the coarse 64-trajectory noise band.
  CHECK(std::abs(traj.grid[0][1].n_tri - master.grid[0][1].n_tri) <= 5.0 / std::sqrt(64.0));
  CHECK(traj.grid[0][0].n_tri == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("superposition scan shapes and endpoint physics") {
  ScenarioConfig cfg = base_config();
  cfg.method = Method::ClosedForm;
  cfg.points = {{"Q", named_point("Q")}, {"S", named_point("S")}};
  const std::vector<double> p_grid = {0.0, 0.5, 1.0};
  const ScanResult res = run_superposition_scan(cfg, p_grid, 10.0);

  CHECK(res.axis_name == "p");
  REQUIRE(res.cells.size() == 6);  // point-major: Q x {p}, then S x {p}
  REQUIRE(res.times.size() == 1);
  CHECK(res.times[0] == 10.0);
  CHECK(res.cells[0].axis == 0.0);
  CHECK(res.cells[2].axis == 1.0);
  CHECK(res.cells[0].coords == std::array<double, 3>{1.0, 1.0, 1.0});
  CHECK(res.cells[3].coords == std::array<double, 3>{-0.5, -0.5, -0.5});

  // p = 0 at Q: the W state is frozen at its initial negativity.
  CHECK(res.grid[0][0].n_tri == doctest::Approx(kTwoRootTwoThirds).epsilon(1e-9));
  // p = 1 at S: the GHZ state is frozen at 1.
  CHECK(res.grid[5][0].n_tri == doctest::Approx(1.0).epsilon(1e-9));

  CHECK_THROWS_AS(run_superposition_scan(cfg, {0.0, 1.5}, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(run_superposition_scan(cfg, {}, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(run_superposition_scan(cfg, p_grid, -1.0), std::invalid_argument);
}

TEST_CASE("configuration defects are rejected") {
  ScenarioConfig cfg = base_config();
  cfg.method = Method::ClosedForm;
  cfg.channel = NoiseChannel::Amplitude;
  CHECK_THROWS_AS(run_scenario(cfg), std::invalid_argument);

  cfg = base_config();
  cfg.t_max = 0.0;
  CHECK_THROWS_AS(run_scenario(cfg), std::invalid_argument);

  cfg = base_config();
  cfg.time_samples = 1;
  CHECK_THROWS_AS(run_scenario(cfg), std::invalid_argument);

  cfg = base_config();
  cfg.state = StateFamily::Ghzw;
  cfg.p = 1.5;
  CHECK_THROWS_AS(run_scenario(cfg), std::invalid_argument);

  cfg = base_config();
  cfg.gamma = -1.0;
  CHECK_THROWS_AS(run_scenario(cfg), InvalidCorrelationError);

  cfg = base_config();
  cfg.method = Method::Trajectories;
  cfg.n_traj = 0;
  CHECK_THROWS_AS(run_scenario(cfg), std::invalid_argument);
}
