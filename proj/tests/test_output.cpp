#include "qcorr/output.hpp"

#include "qcorr/scenario.hpp"

#include <doctest.h>

#include <array>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace qcorr;

namespace {

NegativityReport report(double t, double tri, std::array<double, 3> bipart,
                        std::array<double, 3> pair) {
  NegativityReport rep;
  rep.t = t;
  rep.n_tri = tri;
  rep.n_bipart = bipart;
  rep.n_pair = pair;
  return rep;
}

ScanResult handmade_result() {
  ScanResult res;
  res.title = "demo";
  res.axis_name = "s";
  res.cells = {ScanCell{0.0, {0.0, 0.0, -1.0}, "P"},
               ScanCell{0.25, {0.5, 0.5, -0.875}, ""}};
  res.times = {0.0, 1.0};
  res.grid = {
      {report(0.0, 1.0, {1.0, 1.0, 1.0}, {0.0, 0.0, 0.0}),
       report(1.0, 0.5, {0.25, 0.25, 0.125}, {0.0, 0.0, 0.0})},
      {report(0.0, 1.0, {1.0, 1.0, 1.0}, {0.0, 0.0, 0.0}),
       report(1.0, 1.52299797e-08, {0.0, 0.0, 0.0}, {0.0, 0.0, 0.0})},
  };
  return res;
}

// A result with `n_cells` cells over times [0, 2] whose maximum tripartite
// negativity sits at the last cell and last time.
ScanResult synthetic_grid(std::size_t n_cells, std::size_t n_times) {
  ScanResult res;
  res.title = "synthetic";
  res.axis_name = "s";
  std::vector<double> times;
  for (std::size_t ti = 0; ti < n_times; ++ti) {
    times.push_back(2.0 * static_cast<double>(ti) / static_cast<double>(n_times - 1));
  }
  res.times = times;
  for (std::size_t ci = 0; ci < n_cells; ++ci) {
    const double axis =
        n_cells > 1 ? static_cast<double>(ci) / static_cast<double>(n_cells - 1) : 0.0;
    res.cells.push_back(ScanCell{axis, {axis, axis, 0.0}, ""});
    std::vector<NegativityReport> row;
    for (std::size_t ti = 0; ti < n_times; ++ti) {
      const double v = 0.1 + 0.8 * (static_cast<double>(ci * n_times + ti) /
                                    static_cast<double>(n_cells * n_times - 1));
      row.push_back(report(times[ti], v, {v, v, v}, {0.0, 0.0, 0.0}));
    }
    res.grid.push_back(row);
  }
  return res;
}

}  // namespace

TEST_CASE("format_value renders nine significant digits, always") {
  CHECK(format_value(1.0) == "1.00000000");
  CHECK(format_value(0.25) == "0.250000000");
  CHECK(format_value(0.0) == "0.00000000");
  CHECK(format_value(-0.875) == "-0.875000000");
  CHECK(format_value(2.0 / 7.0) == "0.285714286");
  CHECK(format_value(1.52299797e-08) == "1.52299797e-08");
}

TEST_CASE("csv_string emits the exact documented layout, byte for byte") {
  const std::string expected =
      "# axis: s\n"
      "# cell 0: s=0.00000000 coords=0.00000000,0.00000000,-1.00000000 label=P\n"
      "# cell 1: s=0.250000000 coords=0.500000000,0.500000000,-0.875000000\n"
      "axis,t,N_ABC,N_A_BC,N_B_AC,N_C_AB,N_AB,N_AC,N_BC\n"
      "0.00000000,0.00000000,1.00000000,1.00000000,1.00000000,1.00000000,"
      "0.00000000,0.00000000,0.00000000\n"
      "0.00000000,1.00000000,0.500000000,0.250000000,0.250000000,0.125000000,"
      "0.00000000,0.00000000,0.00000000\n"
      "0.250000000,0.00000000,1.00000000,1.00000000,1.00000000,1.00000000,"
      "0.00000000,0.00000000,0.00000000\n"
      "0.250000000,1.00000000,1.52299797e-08,0.00000000,0.00000000,0.00000000,"
      "0.00000000,0.00000000,0.00000000\n";
  const ScanResult res = handmade_result();
  CHECK(csv_string(res) == expected);
  CHECK(csv_string(res) == csv_string(res));  // re-emission is stable
}

TEST_CASE("empty results are rejected before any bytes are produced") {
  ScanResult empty;
  CHECK_THROWS_AS(csv_string(empty), std::invalid_argument);
  CHECK_THROWS_AS(svg_string(empty, SvgKind::Lines), std::invalid_argument);
  CHECK_THROWS_AS(svg_string(empty, SvgKind::Heatmap), std::invalid_argument);
}

TEST_CASE("emit_csv raises IoError when the target cannot be created") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "qcorr_output_test";
  fs::create_directories(dir);
  const fs::path blocker = dir / "blocker.txt";
  std::ofstream(blocker) << "plain file\n";
  CHECK_THROWS_AS(emit_csv(handmade_result(), blocker / "sub.csv"), IoError);

  // A legal nested target is created along with its parents.
  const fs::path target = dir / "nested" / "out.csv";
  emit_csv(handmade_result(), target);
  CHECK(fs::exists(target));
  fs::remove_all(dir);
}

TEST_CASE("lines charts cap the polyline count at ten cells") {
  const ScanResult res = synthetic_grid(12, 5);
  const std::string svg = svg_string(res, SvgKind::Lines);
  std::size_t count = 0;
  for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos;
       pos = svg.find("<polyline", pos + 1)) {
    ++count;
  }
  CHECK(count == 10);
  // Time axis spans the full plot width: x from 70 to 640.
  CHECK(svg.find("points=\"70.00,") != std::string::npos);
  CHECK(svg.find(" 640.00,") != std::string::npos);
  CHECK(svg.find("demo") == std::string::npos);
  CHECK(svg.find("synthetic") != std::string::npos);
}

TEST_CASE("single-time results draw a profile with one polyline per group") {
  // Two correlation points x three p values, point-major: the axis resets
  // once, so the profile splits into exactly two polylines.
  ScanResult res;
  res.title = "profile";
  res.axis_name = "p";
  res.times = {10.0};
  for (int rep = 0; rep < 2; ++rep) {
    for (double p : {0.0, 0.5, 1.0}) {
      res.cells.push_back(ScanCell{p, {1.0, 1.0, 1.0}, ""});
      res.grid.push_back({report(10.0, 0.2 + 0.1 * p + 0.3 * rep, {0, 0, 0}, {0, 0, 0})});
    }
  }
  const std::string svg = svg_string(res, SvgKind::Lines);
  std::size_t count = 0;
  for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos;
       pos = svg.find("<polyline", pos + 1)) {
    ++count;
  }
  CHECK(count == 2);
}

TEST_CASE("heatmap places the hottest cell with the top colormap color") {
  const ScanResult res = synthetic_grid(3, 4);
  const std::string svg = svg_string(res, SvgKind::Heatmap);
  // Max value at cell 2, time 3: x = 70 + 3*152.50, y = 40 (top row), with
  // the saturated viridis end color.
  CHECK(svg.find("<rect x=\"527.50\" y=\"40.00\" width=\"153.00\" height=\"143.83\" "
                 "fill=\"#fde725\"/>") != std::string::npos);
  // A colorbar is present (18-wide swatches on the right margin).
  CHECK(svg.find("width=\"18\"") != std::string::npos);
}

TEST_CASE("bipartition and pairwise charts require a single cell") {
  const ScanResult res = synthetic_grid(2, 5);
  CHECK_THROWS_AS(svg_string(res, SvgKind::Lines, PlotColumns::Bipartitions),
                  std::invalid_argument);
  CHECK_THROWS_AS(svg_string(res, SvgKind::Lines, PlotColumns::Pairwise),
                  std::invalid_argument);

  const ScanResult one = synthetic_grid(1, 5);
  const std::string svg = svg_string(one, SvgKind::Lines, PlotColumns::Bipartitions);
  std::size_t count = 0;
  for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos;
       pos = svg.find("<polyline", pos + 1)) {
    ++count;
  }
  CHECK(count == 3);
  CHECK(svg.find("A|BC") != std::string::npos);
}
