#include "qcorr/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

namespace qcorr {

namespace {

// Fixed chart geometry; tests recompute the data -> pixel affine from these.
constexpr double kWidth = 800.0;
constexpr double kHeight = 520.0;
constexpr double kLeft = 70.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;
constexpr double kRightLines = 160.0;    // legend gutter
constexpr double kRightHeatmap = 120.0;  // colorbar gutter
constexpr int kMaxPolylines = 10;

const char* kPalette[kMaxPolylines] = {"#4477aa", "#ee6677", "#228833", "#ccbb44", "#66ccee",
                                       "#aa3377", "#bbbbbb", "#222255", "#cc3311", "#009988"};

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

std::string px(double v) { return fmt("%.2f", v); }

void check_result(const ScanResult& result) {
  if (result.cells.empty() || result.times.empty()) {
    throw std::invalid_argument("output: result grid is empty");
  }
  if (result.grid.size() != result.cells.size()) {
    throw std::invalid_argument("output: grid / cell count mismatch");
  }
  for (const auto& row : result.grid) {
    if (row.size() != result.times.size()) {
      throw std::invalid_argument("output: grid row / time count mismatch");
    }
  }
}

// Linear interpolation through five viridis anchors; monotone in luminance,
// so higher negativity always reads brighter.
std::string viridis(double u) {
  static constexpr double stops[5][3] = {
      {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}};
  u = std::clamp(u, 0.0, 1.0);
  const double x = u * 4.0;
  const int i = std::min(3, static_cast<int>(x));
  const double f = x - i;
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                static_cast<int>(std::lround(stops[i][0] + f * (stops[i + 1][0] - stops[i][0]))),
                static_cast<int>(std::lround(stops[i][1] + f * (stops[i + 1][1] - stops[i][1]))),
                static_cast<int>(std::lround(stops[i][2] + f * (stops[i + 1][2] - stops[i][2]))));
  return buf;
}

std::string cell_name(const ScanResult& result, std::size_t ci) {
  const ScanCell& cell = result.cells[ci];
  if (!cell.label.empty()) return cell.label;
  return result.axis_name + "=" + fmt("%.3g", cell.axis);
}

// Up to kMaxPolylines cell indices, landmark-labeled cells first.
std::vector<std::size_t> pick_cells(const ScanResult& result) {
  std::vector<std::size_t> picked;
  if (result.cells.size() <= kMaxPolylines) {
    for (std::size_t i = 0; i < result.cells.size(); ++i) picked.push_back(i);
    return picked;
  }
  for (std::size_t i = 0; i < result.cells.size() && picked.size() < kMaxPolylines; ++i) {
    if (!result.cells[i].label.empty()) picked.push_back(i);
  }
  for (std::size_t i = 0; i < result.cells.size() && picked.size() < kMaxPolylines; ++i) {
    if (result.cells[i].label.empty()) picked.push_back(i);
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

struct Frame {
  double x0 = 0.0, x1 = 1.0;  // data range
  double y0 = 0.0, y1 = 1.0;
  double plot_w = 0.0, plot_h = 0.0;

  double map_x(double x) const {
    return kLeft + (x1 > x0 ? (x - x0) / (x1 - x0) : 0.5) * plot_w;
  }
  double map_y(double y) const {
    return kTop + plot_h - (y1 > y0 ? (y - y0) / (y1 - y0) : 0.5) * plot_h;
  }
};

void open_svg(std::string& svg, const std::string& title) {
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(kWidth) + "\" height=\"" +
         px(kHeight) + "\" viewBox=\"0 0 " + px(kWidth) + " " + px(kHeight) + "\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + px(kWidth) + "\" height=\"" + px(kHeight) +
         "\" fill=\"#ffffff\"/>\n";
  if (!title.empty()) {
    svg += "<text x=\"" + px(kWidth / 2) +
           "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">" +
           title + "</text>\n";
  }
}

void draw_axes(std::string& svg, const Frame& f, const std::string& x_label,
               const std::string& y_label) {
  const double bx = kLeft + f.plot_w;
  const double by = kTop + f.plot_h;
  svg += "<rect x=\"" + px(kLeft) + "\" y=\"" + px(kTop) + "\" width=\"" + px(f.plot_w) +
         "\" height=\"" + px(f.plot_h) + "\" fill=\"none\" stroke=\"#333333\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double tx = f.x0 + (f.x1 - f.x0) * k / 4.0;
    const double ty = f.y0 + (f.y1 - f.y0) * k / 4.0;
    const double xpix = f.map_x(tx);
    const double ypix = f.map_y(ty);
    svg += "<line x1=\"" + px(xpix) + "\" y1=\"" + px(by) + "\" x2=\"" + px(xpix) + "\" y2=\"" +
           px(by + 5) + "\" stroke=\"#333333\"/>\n";
    svg += "<text x=\"" + px(xpix) + "\" y=\"" + px(by + 20) +
           "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" +
           fmt("%.3g", tx) + "</text>\n";
    svg += "<line x1=\"" + px(kLeft - 5) + "\" y1=\"" + px(ypix) + "\" x2=\"" + px(kLeft) +
           "\" y2=\"" + px(ypix) + "\" stroke=\"#333333\"/>\n";
    svg += "<text x=\"" + px(kLeft - 8) + "\" y=\"" + px(ypix + 4) +
           "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" +
           fmt("%.3g", ty) + "</text>\n";
  }
  svg += "<text x=\"" + px(kLeft + f.plot_w / 2) + "\" y=\"" + px(by + 38) +
         "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">" + x_label +
         "</text>\n";
  svg += "<text x=\"16\" y=\"" + px(kTop + f.plot_h / 2) +
         "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         px(kTop + f.plot_h / 2) + ")\">" + y_label + "</text>\n";
}

void add_polyline(std::string& svg, const std::vector<double>& xs, const std::vector<double>& ys,
                  const Frame& f, const char* color) {
  svg += "<polyline fill=\"none\" stroke=\"";
  svg += color;
  svg += "\" stroke-width=\"1.5\" points=\"";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) svg += " ";
    svg += px(f.map_x(xs[k])) + "," + px(f.map_y(ys[k]));
  }
  svg += "\"/>\n";
}

void add_legend_entry(std::string& svg, std::size_t slot, const char* color,
                      const std::string& label) {
  const double y = kTop + 12.0 + 18.0 * static_cast<double>(slot);
  const double x = kWidth - kRightLines + 14.0;
  svg += "<line x1=\"" + px(x) + "\" y1=\"" + px(y) + "\" x2=\"" + px(x + 22) + "\" y2=\"" +
         px(y) + "\" stroke=\"";
  svg += color;
  svg += "\" stroke-width=\"2\"/>\n";
  svg += "<text x=\"" + px(x + 28) + "\" y=\"" + px(y + 4) +
         "\" font-family=\"sans-serif\" font-size=\"12\">" + label + "</text>\n";
}

double grid_max(const ScanResult& result, PlotColumns columns) {
  double best = 0.0;
  for (const auto& row : result.grid) {
    for (const NegativityReport& rep : row) {
      switch (columns) {
        case PlotColumns::Tri:
          best = std::max(best, rep.n_tri);
          break;
        case PlotColumns::Bipartitions:
          for (double v : rep.n_bipart) best = std::max(best, v);
          break;
        case PlotColumns::Pairwise:
          for (double v : rep.n_pair) best = std::max(best, v);
          break;
      }
    }
  }
  return best;
}

std::string svg_lines(const ScanResult& result, PlotColumns columns) {
  Frame f;
  f.plot_w = kWidth - kLeft - kRightLines;
  f.plot_h = kHeight - kTop - kBottom;
  f.x0 = result.times.front();
  f.x1 = result.times.back();
  f.y0 = 0.0;
  f.y1 = std::max(1e-9, 1.05 * grid_max(result, columns));

  std::string svg;
  open_svg(svg, result.title);
  draw_axes(svg, f, "t [1/gamma]", "negativity");

  if (columns == PlotColumns::Tri) {
    const std::vector<std::size_t> picked = pick_cells(result);
    for (std::size_t slot = 0; slot < picked.size(); ++slot) {
      const std::size_t ci = picked[slot];
      std::vector<double> ys;
      ys.reserve(result.times.size());
      for (const NegativityReport& rep : result.grid[ci]) ys.push_back(rep.n_tri);
      add_polyline(svg, result.times, ys, f, kPalette[slot]);
      add_legend_entry(svg, slot, kPalette[slot], cell_name(result, ci));
    }
  } else {
    if (result.cells.size() != 1) {
      throw std::invalid_argument(
          "output: bipartition/pairwise charts need exactly one correlation cell");
    }
    const bool bipart = columns == PlotColumns::Bipartitions;
    const char* names[3][2] = {{"A|BC", "A|B"}, {"B|AC", "A|C"}, {"C|AB", "B|C"}};
    for (int series = 0; series < 3; ++series) {
      std::vector<double> ys;
      ys.reserve(result.times.size());
      for (const NegativityReport& rep : result.grid[0]) {
        ys.push_back(bipart ? rep.n_bipart[static_cast<std::size_t>(series)]
                            : rep.n_pair[static_cast<std::size_t>(series)]);
      }
      add_polyline(svg, result.times, ys, f, kPalette[series]);
      add_legend_entry(svg, static_cast<std::size_t>(series), kPalette[series],
                       names[series][bipart ? 0 : 1]);
    }
  }
  svg += "</svg>\n";
  return svg;
}

// Single evaluation time: negativity across the scan axis, one polyline per
// correlation point (groups break where the axis value restarts).
std::string svg_profile(const ScanResult& result) {
  Frame f;
  f.plot_w = kWidth - kLeft - kRightLines;
  f.plot_h = kHeight - kTop - kBottom;
  f.x0 = result.cells.front().axis;
  f.x1 = f.x0;
  for (const ScanCell& cell : result.cells) {
    f.x0 = std::min(f.x0, cell.axis);
    f.x1 = std::max(f.x1, cell.axis);
  }
  f.y0 = 0.0;
  f.y1 = std::max(1e-9, 1.05 * grid_max(result, PlotColumns::Tri));

  std::string svg;
  open_svg(svg, result.title);
  draw_axes(svg, f, result.axis_name, "negativity");

  std::size_t start = 0;
  std::size_t slot = 0;
  while (start < result.cells.size()) {
    std::size_t stop = start + 1;
    while (stop < result.cells.size() && result.cells[stop].axis > result.cells[stop - 1].axis) {
      ++stop;
    }
    std::vector<double> xs, ys;
    xs.reserve(stop - start);
    ys.reserve(stop - start);
    for (std::size_t ci = start; ci < stop; ++ci) {
      xs.push_back(result.cells[ci].axis);
      ys.push_back(result.grid[ci].front().n_tri);
    }
    const char* color = kPalette[slot % kMaxPolylines];
    add_polyline(svg, xs, ys, f, color);
    if (slot < kMaxPolylines) {
      add_legend_entry(svg, slot, color, cell_name(result, start));
    }
    ++slot;
    start = stop;
  }
  svg += "</svg>\n";
  return svg;
}

std::string svg_heatmap(const ScanResult& result) {
  Frame f;
  f.plot_w = kWidth - kLeft - kRightHeatmap;
  f.plot_h = kHeight - kTop - kBottom;

  const double vmax = std::max(1e-300, grid_max(result, PlotColumns::Tri));
  const double cell_w = f.plot_w / static_cast<double>(result.times.size());
  const double cell_h = f.plot_h / static_cast<double>(result.cells.size());

  std::string svg;
  open_svg(svg, result.title);

  // Row 0 (first cell) at the bottom so the axis value increases upward.
  for (std::size_t ci = 0; ci < result.cells.size(); ++ci) {
    const double y = kTop + f.plot_h - cell_h * static_cast<double>(ci + 1);
    for (std::size_t ti = 0; ti < result.times.size(); ++ti) {
      const double x = kLeft + cell_w * static_cast<double>(ti);
      svg += "<rect x=\"" + px(x) + "\" y=\"" + px(y) + "\" width=\"" + px(cell_w + 0.5) +
             "\" height=\"" + px(cell_h + 0.5) + "\" fill=\"" +
             viridis(result.grid[ci][ti].n_tri / vmax) + "\"/>\n";
    }
  }

  // Frame and tick labels over the tiles.
  svg += "<rect x=\"" + px(kLeft) + "\" y=\"" + px(kTop) + "\" width=\"" + px(f.plot_w) +
         "\" height=\"" + px(f.plot_h) + "\" fill=\"none\" stroke=\"#333333\"/>\n";
  const double by = kTop + f.plot_h;
  for (int k = 0; k <= 4; ++k) {
    const double tt =
        result.times.front() + (result.times.back() - result.times.front()) * k / 4.0;
    const double xpix = kLeft + f.plot_w * k / 4.0;
    svg += "<text x=\"" + px(xpix) + "\" y=\"" + px(by + 20) +
           "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" +
           fmt("%.3g", tt) + "</text>\n";
    const double av = result.cells.front().axis +
                      (result.cells.back().axis - result.cells.front().axis) * k / 4.0;
    const double ypix = by - f.plot_h * k / 4.0;
    svg += "<text x=\"" + px(kLeft - 8) + "\" y=\"" + px(ypix + 4) +
           "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" +
           fmt("%.3g", av) + "</text>\n";
  }
  svg += "<text x=\"" + px(kLeft + f.plot_w / 2) + "\" y=\"" + px(by + 38) +
         "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">t [1/gamma]</text>\n";
  svg += "<text x=\"16\" y=\"" + px(kTop + f.plot_h / 2) +
         "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         px(kTop + f.plot_h / 2) + ")\">" + result.axis_name + "</text>\n";

  // Colorbar: discrete swatches from 0 (bottom) to vmax (top).
  const double bar_x = kWidth - kRightHeatmap + 30.0;
  const int bar_steps = 24;
  const double bar_h = f.plot_h / bar_steps;
  for (int k = 0; k < bar_steps; ++k) {
    const double u = (k + 0.5) / bar_steps;
    const double y = kTop + f.plot_h - bar_h * (k + 1);
    svg += "<rect x=\"" + px(bar_x) + "\" y=\"" + px(y) + "\" width=\"18\" height=\"" +
           px(bar_h + 0.5) + "\" fill=\"" + viridis(u) + "\"/>\n";
  }
  svg += "<text x=\"" + px(bar_x + 24) + "\" y=\"" + px(kTop + f.plot_h) +
         "\" font-family=\"sans-serif\" font-size=\"11\">0</text>\n";
  svg += "<text x=\"" + px(bar_x + 24) + "\" y=\"" + px(kTop + 10) +
         "\" font-family=\"sans-serif\" font-size=\"11\">" + fmt("%.3g", vmax) + "</text>\n";
  svg += "</svg>\n";
  return svg;
}

void write_file(const std::filesystem::path& file, const std::string& text) {
  std::error_code ec;
  if (file.has_parent_path() && !file.parent_path().empty()) {
    std::filesystem::create_directories(file.parent_path(), ec);
    if (ec) {
      throw IoError("cannot create directory " + file.parent_path().string() + ": " +
                    ec.message());
    }
  }
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + file.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed while writing " + file.string());
}

}  // namespace

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%#.9g", v);
  return buf;
}

std::string csv_string(const ScanResult& result) {
  check_result(result);

  std::string csv;
  csv += "# axis: " + result.axis_name + "\n";
  for (std::size_t ci = 0; ci < result.cells.size(); ++ci) {
    const ScanCell& cell = result.cells[ci];
    csv += "# cell " + std::to_string(ci) + ": " + result.axis_name + "=" +
           format_value(cell.axis) + " coords=" + format_value(cell.coords[0]) + "," +
           format_value(cell.coords[1]) + "," + format_value(cell.coords[2]);
    if (!cell.label.empty()) csv += " label=" + cell.label;
    csv += "\n";
  }
  csv += "axis,t,N_ABC,N_A_BC,N_B_AC,N_C_AB,N_AB,N_AC,N_BC\n";

  for (std::size_t ci = 0; ci < result.cells.size(); ++ci) {
    for (std::size_t ti = 0; ti < result.times.size(); ++ti) {
      const NegativityReport& rep = result.grid[ci][ti];
      csv += format_value(result.cells[ci].axis);
      csv += ',';
      csv += format_value(result.times[ti]);
      csv += ',';
      csv += format_value(rep.n_tri);
      for (double v : rep.n_bipart) {
        csv += ',';
        csv += format_value(v);
      }
      for (double v : rep.n_pair) {
        csv += ',';
        csv += format_value(v);
      }
      csv += '\n';
    }
  }
  return csv;
}

std::string svg_string(const ScanResult& result, SvgKind kind, PlotColumns columns) {
  check_result(result);
  if (kind == SvgKind::Heatmap) return svg_heatmap(result);
  if (result.times.size() == 1) return svg_profile(result);
  return svg_lines(result, columns);
}

void emit_csv(const ScanResult& result, const std::filesystem::path& file) {
  write_file(file, csv_string(result));
}

void emit_svg(const ScanResult& result, SvgKind kind, const std::filesystem::path& file,
              PlotColumns columns) {
  write_file(file, svg_string(result, kind, columns));
}

}  // namespace qcorr
