#pragma once

#include "qcorr/scenario.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>

namespace qcorr {

// Raised for filesystem failures (unwritable target, unreadable config).
// The CLI maps this to a dedicated exit code.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SvgKind { Lines, Heatmap };

// Which measures a lines chart plots: the tripartite negativity per cell, or
// the three bipartition / pairwise columns of a single cell.
enum class PlotColumns { Tri, Bipartitions, Pairwise };

// Deterministic CSV bytes for a scan result.  Layout: `#` comment lines
// carrying the axis name and each cell's full coordinates, then the exact
// header `axis,t,N_ABC,N_A_BC,N_B_AC,N_C_AB,N_AB,N_AC,N_BC`, then one data
// row per (cell, time), axis-major / time-minor, every value with 9
// significant digits.  Re-emission of the same result is byte-identical.
std::string csv_string(const ScanResult& result);

// Self-contained SVG chart.  Lines: tripartite negativity over time, one
// polyline per cell (capped at 10, landmark cells preferred) — or, when the
// result holds a single evaluation time, the profile across the axis, one
// polyline per correlation point.  Heatmap: (time, axis) -> color by
// tripartite negativity with a monotone colormap and colorbar.  Axis labels
// carry units of 1/gamma.  Throws std::invalid_argument on an empty grid.
std::string svg_string(const ScanResult& result, SvgKind kind,
                       PlotColumns columns = PlotColumns::Tri);

// File emitters: parent directories are created, partial writes raise
// IoError, nothing is written for invalid input.
void emit_csv(const ScanResult& result, const std::filesystem::path& file);
void emit_svg(const ScanResult& result, SvgKind kind, const std::filesystem::path& file,
              PlotColumns columns = PlotColumns::Tri);

// 9-significant-digit decimal formatting used for every CSV value.
std::string format_value(double v);

}  // namespace qcorr
