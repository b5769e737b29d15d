#include "qcorr/unravel.hpp"

#include "qcorr/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace qcorr {

namespace {

long long step_count(double t_max, double dt) {
  return std::max<long long>(0, static_cast<long long>(std::ceil(t_max / dt - 1e-9)));
}

// Sample times -> grid steps, with the same rounding and bounds rules as the
// master-equation integrator so ensemble and master series line up exactly.
std::vector<long long> sample_steps_for(const EvolutionProblem& problem,
                                        const std::vector<double>& sample_times,
                                        long long n_steps) {
  std::vector<long long> steps;
  steps.reserve(sample_times.size());
  double previous = -1.0;
  for (double t : sample_times) {
    if (!(t >= -1e-9) || t > problem.t_max + 0.5 * problem.dt) {
      throw std::invalid_argument("ensemble_series: sample time " + std::to_string(t) +
                                  " outside [0, t_max]");
    }
    if (t < previous) {
      throw std::invalid_argument("ensemble_series: sample times must be ascending");
    }
    previous = t;
    steps.push_back(std::min(std::llround(t / problem.dt), n_steps));
  }
  return steps;
}

// Extracts the state vector of a rank-1 density matrix with a deterministic
// global phase (largest-magnitude entry made real positive).
ComplexVector pure_state_vector(const ComplexMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(symmetrized(rho));
  if (solver.info() != Eigen::Success) {
    throw std::invalid_argument("trajectory unraveling: eigendecomposition of rho0 failed");
  }
  const Eigen::Index top = rho.rows() - 1;  // eigenvalues ascending
  if (solver.eigenvalues()(top) < 1.0 - 1e-10) {
    throw std::invalid_argument(
        "trajectory unraveling requires a pure initial state (largest eigenvalue " +
        std::to_string(solver.eigenvalues()(top)) + ")");
  }
  ComplexVector psi = solver.eigenvectors().col(top);
  psi.normalize();
  Eigen::Index anchor = 0;
  psi.cwiseAbs().maxCoeff(&anchor);
  const Complex pivot = psi(anchor);
  psi *= std::abs(pivot) / pivot;
  return psi;
}

// Marches one trajectory, invoking record(step, psi) at every grid step
// including step 0.  Per step: the deterministic Hamiltonian phase, then the
// three commuting unitary noise kicks cos(DW_j) I - i sin(DW_j) s_j.
template <typename Record>
void march_trajectory(const EvolutionProblem& problem, const NoiseSampler& sampler,
                      std::uint64_t seed, long long n_steps, Record&& record) {
  ComplexVector psi = pure_state_vector(problem.rho0);
  GaussianRng rng(seed);
  const double dt = problem.dt;
  const bool dephasing = problem.channel == NoiseChannel::Dephasing;

  Eigen::VectorXcd phase;  // exp(-i h_i dt), empty when omega == 0
  if (problem.sys.omega != 0.0) {
    const Eigen::VectorXd h = hamiltonian_sys(problem.sys).diagonal().real();
    phase.resize(h.size());
    for (Eigen::Index i = 0; i < h.size(); ++i) phase(i) = std::polar(1.0, -h(i) * dt);
  }

  record(0, static_cast<const ComplexVector&>(psi));
  for (long long step = 1; step <= n_steps; ++step) {
    if (phase.size() > 0) psi.array() *= phase.array();
    const std::array<double, 3> dw = sample_increments(sampler, dt, rng);
    for (int q = 0; q < 3; ++q) {
      const double c = std::cos(dw[static_cast<std::size_t>(q)]);
      const double s = std::sin(dw[static_cast<std::size_t>(q)]);
      const Eigen::Index mask = Eigen::Index{1} << (2 - q);
      if (dephasing) {
        // exp(-i w sigma_z) is diagonal: phase -w where the bit is clear, +w set.
        const Complex f0(c, -s);
        const Complex f1(c, s);
        for (Eigen::Index i = 0; i < 8; ++i) psi(i) *= (i & mask) ? f1 : f0;
      } else {
        // exp(-i w sigma_x) mixes the bit pair.
        const Complex off(0.0, -s);
        for (Eigen::Index i = 0; i < 8; ++i) {
          if (i & mask) continue;
          const Complex a = psi(i);
          const Complex b = psi(i | mask);
          psi(i) = c * a + off * b;
          psi(i | mask) = c * b + off * a;
        }
      }
    }
    record(step, static_cast<const ComplexVector&>(psi));
  }
}

ComplexMatrix cleaned_mean(ComplexMatrix rho) {
  rho = symmetrized(rho);
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > 1e-12) rho /= tr;
  return rho;
}

}  // namespace

NoiseSampler make_sampler(const CorrelationSpec& corr) {
  require_valid(corr);
  Eigen::Matrix3d k;
  k << corr.gamma, corr.gamma_ab, corr.gamma_ac,   //
      corr.gamma_ab, corr.gamma, corr.gamma_bc,    //
      corr.gamma_ac, corr.gamma_bc, corr.gamma;

  // Positive-semidefinite Cholesky: a vanishing pivot zeroes its column, so
  // the rank-deficient boundary points (fully correlated / anticorrelated)
  // factor exactly instead of failing a strict positive-definite test.
  const double tol = 1e-12 * corr.gamma;
  Eigen::Matrix3d l = Eigen::Matrix3d::Zero();
  for (int j = 0; j < 3; ++j) {
    double d = k(j, j);
    for (int m = 0; m < j; ++m) d -= l(j, m) * l(j, m);
    if (d < -tol) {
      throw InvalidCorrelationError("correlation matrix is not positive semidefinite (pivot " +
                                    std::to_string(d) + ")");
    }
    if (d <= tol) continue;
    l(j, j) = std::sqrt(d);
    for (int i = j + 1; i < 3; ++i) {
      double v = k(i, j);
      for (int m = 0; m < j; ++m) v -= l(i, m) * l(j, m);
      l(i, j) = v / l(j, j);
    }
  }

  NoiseSampler sampler;
  sampler.corr = corr;
  sampler.cholesky_factor = l;
  return sampler;
}

double GaussianRng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(angle);
  have_spare_ = true;
  return r * std::cos(angle);
}

std::array<double, 3> sample_increments(const NoiseSampler& sampler, double dt, GaussianRng& rng) {
  const double scale = std::sqrt(dt);
  const Eigen::Vector3d z(rng.normal(), rng.normal(), rng.normal());
  const Eigen::Vector3d dw = sampler.cholesky_factor * (scale * z);
  return {dw(0), dw(1), dw(2)};
}

std::uint64_t trajectory_seed(std::uint64_t master_seed, std::uint64_t index) {
  std::uint64_t z = master_seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

PureStatePath propagate_trajectory(const EvolutionProblem& problem, const NoiseSampler& sampler,
                                   std::uint64_t seed) {
  validate(problem);
  const long long n_steps = step_count(problem.t_max, problem.dt);

  PureStatePath path;
  path.times.reserve(static_cast<std::size_t>(n_steps) + 1);
  path.states.reserve(static_cast<std::size_t>(n_steps) + 1);
  march_trajectory(problem, sampler, seed, n_steps,
                   [&](long long step, const ComplexVector& psi) {
                     path.times.push_back(static_cast<double>(step) * problem.dt);
                     path.states.push_back(psi);
                   });
  return path;
}

std::vector<ComplexMatrix> ensemble_series(const EvolutionProblem& problem, int n_trajectories,
                                           std::uint64_t seed,
                                           const std::vector<double>& sample_times,
                                           unsigned workers) {
  validate(problem);
  if (n_trajectories < 1) {
    throw std::invalid_argument("ensemble_series: n_trajectories must be at least 1");
  }
  const long long n_steps = step_count(problem.t_max, problem.dt);
  const std::vector<long long> sample_steps = sample_steps_for(problem, sample_times, n_steps);
  const NoiseSampler sampler = make_sampler(problem.corr);
  const Eigen::Index dim = problem.rho0.rows();

  // Trajectories are grouped into fixed blocks; workers race over blocks but
  // block partial sums are reduced in block order afterwards, so the result
  // is bit-identical for every worker count.
  constexpr int kBlock = 64;
  const std::size_t n_blocks =
      (static_cast<std::size_t>(n_trajectories) + kBlock - 1) / kBlock;
  std::vector<std::vector<ComplexMatrix>> block_sums(n_blocks);

  parallel_for(n_blocks, workers, [&](std::size_t block) {
    std::vector<ComplexMatrix> acc(sample_steps.size(), ComplexMatrix::Zero(dim, dim));
    const int lo = static_cast<int>(block) * kBlock;
    const int hi = std::min(n_trajectories, lo + kBlock);
    for (int i = lo; i < hi; ++i) {
      std::size_t next = 0;
      march_trajectory(problem, sampler, trajectory_seed(seed, static_cast<std::uint64_t>(i)),
                       n_steps, [&](long long step, const ComplexVector& psi) {
                         while (next < sample_steps.size() && sample_steps[next] == step) {
                           acc[next].noalias() += psi * psi.adjoint();
                           ++next;
                         }
                       });
    }
    block_sums[block] = std::move(acc);
  });

  std::vector<ComplexMatrix> result(sample_steps.size(), ComplexMatrix::Zero(dim, dim));
  for (std::size_t block = 0; block < n_blocks; ++block) {
    for (std::size_t k = 0; k < result.size(); ++k) result[k] += block_sums[block][k];
  }
  for (ComplexMatrix& rho : result) {
    rho /= static_cast<double>(n_trajectories);
    rho = cleaned_mean(std::move(rho));
  }
  return result;
}

EnsembleResult ensemble_average(const EvolutionProblem& problem, int n_trajectories,
                                std::uint64_t seed, double t_sample, unsigned workers) {
  std::vector<ComplexMatrix> series =
      ensemble_series(problem, n_trajectories, seed, {t_sample}, workers);

  EnsembleResult out;
  out.mean_rho = std::move(series.front());
  out.n_trajectories = n_trajectories;
  out.seed = seed;
  out.t_sample = t_sample;
  const double deficit = std::max(0.0, 1.0 - out.mean_rho.squaredNorm());
  out.standard_error =
      n_trajectories > 1 ? std::sqrt(deficit / static_cast<double>(n_trajectories - 1)) : 0.0;
  return out;
}

}  // namespace qcorr
