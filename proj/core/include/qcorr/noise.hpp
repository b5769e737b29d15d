#pragma once

#include <Eigen/Dense>

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcorr {

// Raised when a correlation specification fails the positivity constraint.
// The CLI maps this to a dedicated exit code.
class InvalidCorrelationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Local decoherence rate gamma (identical for all three qubits) plus the
// pairwise cross-correlation rates Gamma_AB, Gamma_AC, Gamma_BC, all in the
// same units of inverse time.  Physical specs keep the 3x3 rate matrix
// positive semidefinite.
struct CorrelationSpec {
  double gamma = 1.0;
  double gamma_ab = 0.0;
  double gamma_ac = 0.0;
  double gamma_bc = 0.0;
};

// Boundary slack on psd_value, scaled by gamma^3 for dimensional consistency;
// the named points P, Q, R, S all sit exactly on the boundary surface.
inline constexpr double kPsdTol = 1e-12;

// [[gamma, G_AB, G_AC], [G_AB, gamma, G_BC], [G_AC, G_BC, gamma]]
Eigen::Matrix3d rate_matrix(const CorrelationSpec& spec);

// gamma^3 - gamma*(G_AB^2 + G_AC^2 + G_BC^2) + 2*G_AB*G_AC*G_BC, which equals
// the determinant of rate_matrix(spec).  A non-positive or non-finite gamma
// raises InvalidCorrelationError (here and in is_valid / require_valid).
double psd_value(const CorrelationSpec& spec);

// True iff |G_ij| <= gamma for every pair and psd_value >= -kPsdTol*gamma^3.
bool is_valid(const CorrelationSpec& spec);

// Throws InvalidCorrelationError unless is_valid(spec).
void require_valid(const CorrelationSpec& spec);

// One sample of the boundary path P -> Q -> R -> S in the plane
// Gamma_AB = Gamma_AC, coordinates in units of gamma.
struct PathPoint {
  double s = 0.0;
  std::array<double, 3> coords{};  // (G_AB, G_AC, G_BC) / gamma
};

// Piecewise traversal of the boundary curve with s proportional to the
// cumulative span in x = G_AB/gamma = G_AC/gamma:
//   leg 1: P(0,0,-1) -> Q(1,1,1)    along z = 2x^2 - 1   (x-span 1)
//   leg 2: Q(1,1,1)  -> R(-1,-1,1)  along z = 1          (x-span 2)
//   leg 3: R(-1,-1,1)-> S(-1/2,-1/2,-1/2) along z = 2x^2 - 1  (x-span 1/2)
// Breakpoints at s = 2/7 and s = 6/7; the named points are returned exactly.
// Throws std::invalid_argument for s outside [0, 1].
PathPoint path_pqrs(double s);

// Correlation spec at a path point: coordinates scaled by gamma, which must
// be positive and finite (InvalidCorrelationError otherwise).
CorrelationSpec correlation_at(const PathPoint& point, double gamma = 1.0);

// Landmark correlation points (coordinates in units of gamma): the path
// points P, Q, R, S plus the uncorrelated reference O = (0, 0, 0).
const std::vector<std::pair<std::string, std::array<double, 3>>>& named_points();

// Coordinates for a landmark name ("P".."S", "O"); throws
// std::invalid_argument for unknown names.
std::array<double, 3> named_point(std::string_view label);

// Landmark name for exact coordinates, or "" if unnamed.
std::string point_label(const std::array<double, 3>& coords);

}  // namespace qcorr
