#include "qcorr/noise.hpp"

#include <cmath>
#include <sstream>

namespace qcorr {

namespace {

void require_positive_gamma(const CorrelationSpec& spec, const char* what) {
  if (!(spec.gamma > 0.0) || !std::isfinite(spec.gamma)) {
    throw InvalidCorrelationError(std::string(what) + ": gamma must be positive and finite");
  }
}

std::string describe(const CorrelationSpec& spec) {
  std::ostringstream os;
  os << "gamma=" << spec.gamma << ", (G_AB, G_AC, G_BC)=(" << spec.gamma_ab << ", "
     << spec.gamma_ac << ", " << spec.gamma_bc << ")";
  return os.str();
}

}  // namespace

Eigen::Matrix3d rate_matrix(const CorrelationSpec& spec) {
  Eigen::Matrix3d k;
  k << spec.gamma, spec.gamma_ab, spec.gamma_ac,  //
      spec.gamma_ab, spec.gamma, spec.gamma_bc,   //
      spec.gamma_ac, spec.gamma_bc, spec.gamma;
  return k;
}

double psd_value(const CorrelationSpec& spec) {
  require_positive_gamma(spec, "psd_value");
  const double g = spec.gamma;
  const double ab = spec.gamma_ab, ac = spec.gamma_ac, bc = spec.gamma_bc;
  // Expanded determinant of the 3x3 rate matrix; the symmetric triple
  // product carries all three distinct cross rates.
  return g * g * g - g * (ab * ab + ac * ac + bc * bc) + 2.0 * ab * ac * bc;
}

bool is_valid(const CorrelationSpec& spec) {
  require_positive_gamma(spec, "is_valid");
  const double g = spec.gamma;
  const bool bounded = std::abs(spec.gamma_ab) <= g && std::abs(spec.gamma_ac) <= g &&
                       std::abs(spec.gamma_bc) <= g;
  return bounded && psd_value(spec) >= -kPsdTol * g * g * g;
}

void require_valid(const CorrelationSpec& spec) {
  if (!is_valid(spec)) {
    throw InvalidCorrelationError("correlation spec violates the positivity constraint: " +
                                  describe(spec) + ", psd_value=" + std::to_string(psd_value(spec)));
  }
}

PathPoint path_pqrs(double s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw std::invalid_argument("path_pqrs: s must lie in [0, 1]");
  }
  // Named points returned exactly; the generic legs reproduce them to
  // rounding, but scans pin these rows bit-for-bit.
  if (s == 0.0) return {s, {0.0, 0.0, -1.0}};
  if (s == 2.0 / 7.0) return {s, {1.0, 1.0, 1.0}};
  if (s == 6.0 / 7.0) return {s, {-1.0, -1.0, 1.0}};
  if (s == 1.0) return {s, {-0.5, -0.5, -0.5}};

  // Cumulative x-span: legs of length 1, 2, 1/2, total 7/2.
  const double d = 3.5 * s;
  double x = 0.0, z = 0.0;
  if (d <= 1.0) {  // P -> Q on the lower branch
    x = d;
    z = 2.0 * x * x - 1.0;
  } else if (d <= 3.0) {  // Q -> R on the flat branch
    x = 1.0 - (d - 1.0);
    z = 1.0;
  } else {  // R -> S back on the lower branch
    x = -1.0 + (d - 3.0);
    z = 2.0 * x * x - 1.0;
  }
  return {s, {x, x, z}};
}

CorrelationSpec correlation_at(const PathPoint& point, double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw InvalidCorrelationError("correlation_at: gamma must be positive and finite");
  }
  return {gamma, point.coords[0] * gamma, point.coords[1] * gamma, point.coords[2] * gamma};
}

const std::vector<std::pair<std::string, std::array<double, 3>>>& named_points() {
  static const std::vector<std::pair<std::string, std::array<double, 3>>> points = {
      {"P", {0.0, 0.0, -1.0}},
      {"Q", {1.0, 1.0, 1.0}},
      {"R", {-1.0, -1.0, 1.0}},
      {"S", {-0.5, -0.5, -0.5}},
      {"O", {0.0, 0.0, 0.0}},
  };
  return points;
}

std::array<double, 3> named_point(std::string_view label) {
  for (const auto& [name, coords] : named_points()) {
    if (name == label) return coords;
  }
  throw std::invalid_argument("named_point: unknown landmark '" + std::string(label) +
                              "' (expected one of P, Q, R, S, O)");
}

std::string point_label(const std::array<double, 3>& coords) {
  for (const auto& [name, ref] : named_points()) {
    if (coords == ref) return name;
  }
  return "";
}

}  // namespace qcorr
