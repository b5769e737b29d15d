#pragma once

#include "qcorr/liouville.hpp"
#include "qcorr/matrix.hpp"
#include "qcorr/noise.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace qcorr {

// Correlated Gaussian white-noise source shared by the three qubits.  The
// rate matrix K (K_ii = gamma, K_ij = G_ij) is factored once as L L^T with a
// positive-semidefinite Cholesky that tolerates the rank-deficient boundary
// points; increments are then L z sqrt(dt) with z standard normal.  This
// calibration makes the single-qubit dephasing ensemble reproduce the
// coherence decay rate 2*gamma of the master equation, which is the
// normative convention throughout the library.
struct NoiseSampler {
  CorrelationSpec corr{};
  Eigen::Matrix3d cholesky_factor = Eigen::Matrix3d::Zero();  // lower triangular
};

// Factors the rate matrix; throws InvalidCorrelationError when the spec
// fails the positivity constraint.
NoiseSampler make_sampler(const CorrelationSpec& corr);

// Deterministic normal generator: mt19937_64 stream mapped through a
// Box-Muller transform.  Both the engine output and the transform are fully
// specified, so sequences are reproducible bit-for-bit across platforms.
class GaussianRng {
 public:
  explicit GaussianRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in (0, 1]; the open lower end keeps log(u) finite.
  double uniform01() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }

  double normal();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// One triple of correlated Wiener increments, Delta W = L z sqrt(dt).
std::array<double, 3> sample_increments(const NoiseSampler& sampler, double dt, GaussianRng& rng);

// Per-trajectory seed derived from the master seed by a splitmix64-style
// mix; documented so ensembles are reproducible across runs and platforms.
std::uint64_t trajectory_seed(std::uint64_t master_seed, std::uint64_t index);

// Pure-state path recorded at every grid step, t = 0 included.
struct PureStatePath {
  std::vector<double> times;
  std::vector<ComplexVector> states;
};

// Drives one stochastic trajectory: per step the deterministic phase
// exp(-i H_sys dt), then the exact commuting noise kicks
//   prod_j exp(-i s_j DeltaW_j) = prod_j (cos(DeltaW_j) I - i sin(DeltaW_j) s_j).
// Kicks are unitary, so the norm is preserved to rounding.  Requires a pure
// (rank-1 within 1e-10) initial state.
PureStatePath propagate_trajectory(const EvolutionProblem& problem, const NoiseSampler& sampler,
                                   std::uint64_t seed);

// Ensemble mean of |psi><psi| at one sample time.
struct EnsembleResult {
  ComplexMatrix mean_rho;
  int n_trajectories = 0;
  std::uint64_t seed = 0;
  double t_sample = 0.0;
  // Frobenius-scale estimate of the Monte-Carlo error,
  // sqrt((1 - ||mean||_F^2) / (M - 1)): pure trajectory states have unit
  // Frobenius norm, so the mean's norm deficit measures the spread.
  double standard_error = 0.0;
};

// Means of |psi><psi| over n trajectories at each sample time.  Trajectories
// are summed in fixed blocks that are reduced in index order, so the result
// is bit-for-bit identical for any worker count (0 workers = hardware
// concurrency).
std::vector<ComplexMatrix> ensemble_series(const EvolutionProblem& problem, int n_trajectories,
                                           std::uint64_t seed, const std::vector<double>& sample_times,
                                           unsigned workers = 0);

// Single-time convenience wrapper around ensemble_series.
EnsembleResult ensemble_average(const EvolutionProblem& problem, int n_trajectories,
                                std::uint64_t seed, double t_sample, unsigned workers = 0);

}  // namespace qcorr
