#include "qcorr/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <vector>

namespace qcorr {

namespace {

std::string trim(const std::string& text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return text.substr(begin, end - begin);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(trim(text.substr(start)));
      return parts;
    }
    parts.push_back(trim(text.substr(start, pos - start)));
    start = pos + 1;
  }
}

[[noreturn]] void bad_value(const std::string& key, const std::string& text,
                            const std::string& what) {
  throw std::invalid_argument("config: cannot parse '" + text + "' for key '" + key + "' (" +
                              what + ")");
}

int to_bounded_int(const std::string& key, long long v) {
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw std::invalid_argument("config: value for key '" + key + "' is out of range");
  }
  return static_cast<int>(v);
}

bool is_landmark_name(const std::string& text) {
  return text == "P" || text == "Q" || text == "R" || text == "S" || text == "O";
}

}  // namespace

double parse_double(const std::string& key, const std::string& text) {
  const std::string s = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    bad_value(key, text, "expected a number");
  }
  return v;
}

long long parse_int(const std::string& key, const std::string& text) {
  const std::string s = trim(text);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    bad_value(key, text, "expected an integer");
  }
  return v;
}

std::uint64_t parse_uint64(const std::string& key, const std::string& text) {
  const std::string s = trim(text);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    bad_value(key, text, "expected an unsigned integer");
  }
  return v;
}

std::array<double, 3> parse_triple(const std::string& key, const std::string& text) {
  const std::vector<std::string> parts = split(text, ',');
  if (parts.size() != 3) bad_value(key, text, "expected three comma-separated numbers");
  return {parse_double(key, parts[0]), parse_double(key, parts[1]), parse_double(key, parts[2])};
}

void parse_state_spec(const std::string& text, ScenarioConfig& cfg) {
  const std::string s = trim(text);
  if (s == "ghz") {
    cfg.state = StateFamily::Ghz;
    cfg.p = 1.0;
    return;
  }
  if (s == "w") {
    cfg.state = StateFamily::W;
    cfg.p = 0.0;
    return;
  }
  if (s.rfind("ghzw:", 0) == 0) {
    cfg.state = StateFamily::Ghzw;
    cfg.p = parse_double("state", s.substr(5));
    return;
  }
  throw std::invalid_argument("config: unknown state '" + s + "' (expected ghz, w, or ghzw:<p>)");
}

NoiseChannel parse_channel(const std::string& text) {
  const std::string s = trim(text);
  if (s == "dephasing") return NoiseChannel::Dephasing;
  if (s == "amplitude") return NoiseChannel::Amplitude;
  throw std::invalid_argument("config: unknown channel '" + s +
                              "' (expected dephasing or amplitude)");
}

Method parse_method(const std::string& text) {
  const std::string s = trim(text);
  if (s == "master") return Method::Master;
  if (s == "closedform") return Method::ClosedForm;
  if (s == "traj") return Method::Trajectories;
  throw std::invalid_argument("config: unknown method '" + s +
                              "' (expected master, closedform, or traj)");
}

SvgKind parse_svg_kind(const std::string& text) {
  const std::string s = trim(text);
  if (s == "lines") return SvgKind::Lines;
  if (s == "heatmap") return SvgKind::Heatmap;
  throw std::invalid_argument("config: unknown svg_kind '" + s + "' (expected lines or heatmap)");
}

PlotColumns parse_plot_columns(const std::string& text) {
  const std::string s = trim(text);
  if (s == "tri") return PlotColumns::Tri;
  if (s == "bipartitions") return PlotColumns::Bipartitions;
  if (s == "pairwise") return PlotColumns::Pairwise;
  throw std::invalid_argument("config: unknown plot '" + s +
                              "' (expected tri, bipartitions, or pairwise)");
}

std::vector<std::pair<std::string, std::array<double, 3>>> parse_points(const std::string& text) {
  std::vector<std::pair<std::string, std::array<double, 3>>> out;
  for (const std::string& chunk : split(text, ';')) {
    if (chunk.empty()) continue;
    const std::vector<std::string> parts = split(chunk, ',');

    bool all_names = true;
    for (const std::string& part : parts) all_names = all_names && is_landmark_name(part);
    if (all_names) {
      for (const std::string& part : parts) {
        out.emplace_back(part, named_point(part));
      }
      continue;
    }
    if (parts.size() == 3) {
      out.emplace_back("", parse_triple("points", chunk));
      continue;
    }
    throw std::invalid_argument("config: cannot parse points entry '" + chunk +
                                "' (expected landmark names or a numeric triple)");
  }
  if (out.empty()) {
    throw std::invalid_argument("config: points list is empty");
  }
  return out;
}

ConfigMap load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot read config file " + file.string());

  ConfigMap map;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config: line " + std::to_string(line_no) + " of " +
                                  file.string() + " is not key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw std::invalid_argument("config: empty key on line " + std::to_string(line_no) + " of " +
                                  file.string());
    }
    if (!map.emplace(key, value).second) {
      throw std::invalid_argument("config: duplicate key '" + key + "' in " + file.string());
    }
  }
  return map;
}

RunSpec run_spec_from_config(const ConfigMap& map) {
  RunSpec spec;
  bool scan_given = false;

  for (const auto& [key, value] : map) {
    if (key == "title") {
      spec.title = value;
    } else if (key == "scan") {
      scan_given = true;
      if (value == "point") {
        spec.kind = ScanKind::Point;
      } else if (value == "path") {
        spec.kind = ScanKind::Path;
      } else if (value == "superposition") {
        spec.kind = ScanKind::Superposition;
      } else {
        throw std::invalid_argument("config: unknown scan '" + value +
                                    "' (expected point, path, or superposition)");
      }
    } else if (key == "state") {
      parse_state_spec(value, spec.scenario);
    } else if (key == "channel") {
      spec.scenario.channel = parse_channel(value);
    } else if (key == "gamma") {
      spec.scenario.gamma = parse_double(key, value);
    } else if (key == "omega") {
      spec.scenario.omega = parse_double(key, value);
    } else if (key == "corr") {
      spec.scenario.corr = parse_triple(key, value);
    } else if (key == "points") {
      spec.scenario.points = parse_points(value);
    } else if (key == "path_samples") {
      spec.scenario.path_samples = to_bounded_int(key, parse_int(key, value));
    } else if (key == "t_max") {
      spec.scenario.t_max = parse_double(key, value);
    } else if (key == "dt") {
      spec.scenario.dt = parse_double(key, value);
    } else if (key == "time_samples") {
      spec.scenario.time_samples = to_bounded_int(key, parse_int(key, value));
    } else if (key == "method") {
      spec.scenario.method = parse_method(value);
    } else if (key == "n_traj") {
      spec.scenario.n_traj = to_bounded_int(key, parse_int(key, value));
    } else if (key == "seed") {
      spec.scenario.seed = parse_uint64(key, value);
    } else if (key == "p_samples") {
      spec.scenario.p_samples = to_bounded_int(key, parse_int(key, value));
    } else if (key == "t_eval") {
      spec.scenario.t_eval = parse_double(key, value);
    } else if (key == "workers") {
      const long long v = parse_int(key, value);
      if (v < 0) throw std::invalid_argument("config: workers must be non-negative");
      spec.scenario.workers = static_cast<unsigned>(v);
    } else if (key == "csv") {
      spec.csv = value;
    } else if (key == "svg") {
      spec.svg = value;
    } else if (key == "svg_kind") {
      spec.svg_kind = parse_svg_kind(value);
    } else if (key == "plot") {
      spec.plot = parse_plot_columns(value);
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }

  if (!scan_given) {
    spec.kind = spec.scenario.path_samples > 0 ? ScanKind::Path : ScanKind::Point;
  }
  if (spec.kind == ScanKind::Path && spec.scenario.path_samples < 2) {
    throw std::invalid_argument("config: path scans need path_samples >= 2");
  }
  return spec;
}

ScanResult execute_run(const RunSpec& spec) {
  ScanResult result;
  switch (spec.kind) {
    case ScanKind::Point:
    case ScanKind::Path:
      result = run_scenario(spec.scenario);
      break;
    case ScanKind::Superposition: {
      if (spec.scenario.p_samples < 2) {
        throw std::invalid_argument("config: superposition scans need p_samples >= 2");
      }
      const std::vector<double> p_grid = linspace(0.0, 1.0, spec.scenario.p_samples);
      result = run_superposition_scan(spec.scenario, p_grid, spec.scenario.t_eval);
      break;
    }
  }
  result.title = spec.title;

  if (!spec.csv.empty()) emit_csv(result, spec.csv);
  if (!spec.svg.empty()) emit_svg(result, spec.svg_kind, spec.svg, spec.plot);
  return result;
}

}  // namespace qcorr
