#pragma once

#include "qcorr/output.hpp"
#include "qcorr/scenario.hpp"

#include <array>
#include <filesystem>
#include <map>
#include <string>

namespace qcorr {

// Flat key=value text, '#' comments, blank lines ignored.
using ConfigMap = std::map<std::string, std::string>;

enum class ScanKind { Point, Path, Superposition };

// A fully described run: scenario, scan flavor, and output targets (paths
// may be empty when no file of that kind is wanted).
struct RunSpec {
  ScenarioConfig scenario;
  ScanKind kind = ScanKind::Point;
  std::string csv;
  std::string svg;
  SvgKind svg_kind = SvgKind::Lines;
  PlotColumns plot = PlotColumns::Tri;
  std::string title;
};

// Reads a config file; IoError when unreadable, std::invalid_argument on a
// malformed or duplicated line.
ConfigMap load_config(const std::filesystem::path& file);

// Builds a RunSpec from config keys; unknown keys and unparsable values
// raise std::invalid_argument naming the offender.
RunSpec run_spec_from_config(const ConfigMap& map);

// Shared parsers (also used by the CLI for flag values).
double parse_double(const std::string& key, const std::string& text);
long long parse_int(const std::string& key, const std::string& text);
std::uint64_t parse_uint64(const std::string& key, const std::string& text);
std::array<double, 3> parse_triple(const std::string& key, const std::string& text);

// "ghz", "w", or "ghzw:<p>"
void parse_state_spec(const std::string& text, ScenarioConfig& cfg);
// "dephasing" or "amplitude"
NoiseChannel parse_channel(const std::string& text);
// "master", "closedform", or "traj"
Method parse_method(const std::string& text);
// "lines" or "heatmap"
SvgKind parse_svg_kind(const std::string& text);
// "tri", "bipartitions", or "pairwise"
PlotColumns parse_plot_columns(const std::string& text);
// Semicolon-separated mix of landmark names and numeric triples, e.g.
// "P,Q,R,S,O" or "Q; 0.3,0.3,-0.2".
std::vector<std::pair<std::string, std::array<double, 3>>> parse_points(const std::string& text);

// Executes a RunSpec: dispatches on kind, emits the configured outputs, and
// returns the result grid.
ScanResult execute_run(const RunSpec& spec);

}  // namespace qcorr
