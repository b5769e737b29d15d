#include "qcorr/liouville.hpp"

#include "qcorr/entangle.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qcorr {

namespace {

constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};  // (A,B), (A,C), (B,C)

// Everything the right-hand side needs, resolved once per integration.
struct GeneratorContext {
  NoiseChannel channel = NoiseChannel::Dephasing;
  int n = 3;
  Eigen::Index dim = 8;
  double gamma = 1.0;
  std::array<double, 3> cross{};  // (G_AB, G_AC, G_BC)
  Eigen::VectorXd hdiag;          // empty when omega == 0
};

GeneratorContext make_context(const EvolutionProblem& problem) {
  GeneratorContext ctx;
  ctx.channel = problem.channel;
  ctx.n = problem.sys.n_qubits;
  ctx.dim = Eigen::Index{1} << ctx.n;
  ctx.gamma = problem.corr.gamma;
  ctx.cross = {problem.corr.gamma_ab, problem.corr.gamma_ac, problem.corr.gamma_bc};
  if (problem.sys.omega != 0.0) {
    ctx.hdiag = hamiltonian_sys(problem.sys).diagonal().real();
  }
  return ctx;
}

// The channel Paulis are signed permutations, so applying one is an O(dim^2)
// row/column pass instead of a matrix product: sigma_z flips signs where the
// qubit bit is set, sigma_x swaps the bit.

void sigma_left(const GeneratorContext& ctx, int qubit, const ComplexMatrix& in,
                ComplexMatrix& out) {
  const Eigen::Index mask = Eigen::Index{1} << (ctx.n - 1 - qubit);
  if (ctx.channel == NoiseChannel::Dephasing) {
    for (Eigen::Index i = 0; i < ctx.dim; ++i) {
      out.row(i) = ((i & mask) ? -1.0 : 1.0) * in.row(i);
    }
  } else {
    for (Eigen::Index i = 0; i < ctx.dim; ++i) {
      out.row(i) = in.row(i ^ mask);
    }
  }
}

void sigma_right(const GeneratorContext& ctx, int qubit, const ComplexMatrix& in,
                 ComplexMatrix& out) {
  const Eigen::Index mask = Eigen::Index{1} << (ctx.n - 1 - qubit);
  if (ctx.channel == NoiseChannel::Dephasing) {
    for (Eigen::Index j = 0; j < ctx.dim; ++j) {
      out.col(j) = ((j & mask) ? -1.0 : 1.0) * in.col(j);
    }
  } else {
    for (Eigen::Index j = 0; j < ctx.dim; ++j) {
      out.col(j) = in.col(j ^ mask);
    }
  }
}

struct RhsWork {
  ComplexMatrix a[3];  // sigma_j rho
  ComplexMatrix b[3];  // rho sigma_j
  ComplexMatrix tmp;

  void resize(Eigen::Index dim) {
    for (auto& m : a) m.resize(dim, dim);
    for (auto& m : b) m.resize(dim, dim);
    tmp.resize(dim, dim);
  }
};

void rhs_into(const GeneratorContext& ctx, const ComplexMatrix& rho, ComplexMatrix& out,
              RhsWork& w) {
  for (int j = 0; j < 3; ++j) {
    sigma_left(ctx, j, rho, w.a[j]);
    sigma_right(ctx, j, rho, w.b[j]);
  }

  // Local terms: -sum_j gamma (rho - sigma_j rho sigma_j).
  out = (-3.0 * ctx.gamma) * rho;
  for (int j = 0; j < 3; ++j) {
    sigma_right(ctx, j, w.a[j], w.tmp);
    out += ctx.gamma * w.tmp;
  }

  // Cross terms: -G_jk (s_j s_k rho + rho s_j s_k - s_j rho s_k - s_k rho s_j).
  for (int p = 0; p < 3; ++p) {
    const double g = ctx.cross[p];
    if (g == 0.0) continue;
    const int j = kPairs[p][0];
    const int k = kPairs[p][1];
    sigma_left(ctx, j, w.a[k], w.tmp);   // sigma_j sigma_k rho
    out -= g * w.tmp;
    sigma_right(ctx, k, w.b[j], w.tmp);  // rho sigma_j sigma_k
    out -= g * w.tmp;
    sigma_right(ctx, k, w.a[j], w.tmp);  // sigma_j rho sigma_k
    out += g * w.tmp;
    sigma_right(ctx, j, w.a[k], w.tmp);  // sigma_k rho sigma_j
    out += g * w.tmp;
  }

  // -i [H_sys, rho]: H_sys is diagonal, so the commutator is entrywise.
  if (ctx.hdiag.size() > 0) {
    for (Eigen::Index i = 0; i < ctx.dim; ++i) {
      for (Eigen::Index j = 0; j < ctx.dim; ++j) {
        out(i, j) += Complex(0.0, -(ctx.hdiag(i) - ctx.hdiag(j))) * rho(i, j);
      }
    }
  }
}

struct Rk4Work {
  ComplexMatrix k1, k2, k3, k4, stage;
  RhsWork rhs;

  void resize(Eigen::Index dim) {
    k1.resize(dim, dim);
    k2.resize(dim, dim);
    k3.resize(dim, dim);
    k4.resize(dim, dim);
    stage.resize(dim, dim);
    rhs.resize(dim);
  }
};

void rk4_step(const GeneratorContext& ctx, ComplexMatrix& rho, double dt, Rk4Work& w) {
  rhs_into(ctx, rho, w.k1, w.rhs);
  w.stage = rho + (0.5 * dt) * w.k1;
  rhs_into(ctx, w.stage, w.k2, w.rhs);
  w.stage = rho + (0.5 * dt) * w.k2;
  rhs_into(ctx, w.stage, w.k3, w.rhs);
  w.stage = rho + dt * w.k3;
  rhs_into(ctx, w.stage, w.k4, w.rhs);
  rho += (dt / 6.0) * (w.k1 + 2.0 * w.k2 + 2.0 * w.k3 + w.k4);
}

long long step_count(double t_max, double dt) {
  return std::max<long long>(0, static_cast<long long>(std::ceil(t_max / dt - 1e-9)));
}

// Recorded-state cleanup: exact Hermitian part, renormalized when the trace
// has drifted past rounding.
ComplexMatrix cleaned(const ComplexMatrix& rho) {
  ComplexMatrix out = symmetrized(rho);
  const double tr = out.trace().real();
  if (std::abs(tr - 1.0) > 1e-12) out /= tr;
  return out;
}

double trace_drift(const ComplexMatrix& rho) { return std::abs(rho.trace().real() - 1.0); }

}  // namespace

void validate(const EvolutionProblem& problem) {
  if (problem.sys.n_qubits != 3) {
    throw std::invalid_argument("evolution problem: the correlation model is three-qubit; got n_qubits=" +
                                std::to_string(problem.sys.n_qubits));
  }
  if (!std::isfinite(problem.sys.omega)) {
    throw std::invalid_argument("evolution problem: omega must be finite");
  }
  require_valid(problem.corr);
  if (qubit_count(problem.rho0) != problem.sys.n_qubits) {
    throw std::invalid_argument("evolution problem: initial state dimension does not match n_qubits");
  }
  if (hermiticity_error(problem.rho0) > 1e-10) {
    throw std::invalid_argument("evolution problem: initial state is not Hermitian within 1e-10");
  }
  if (std::abs(problem.rho0.trace().real() - 1.0) > 1e-10) {
    throw std::invalid_argument("evolution problem: initial state trace differs from 1 beyond 1e-10");
  }
  const RealVector evals = hermitian_eigenvalues(problem.rho0);
  if (evals(0) < -1e-10) {
    throw std::invalid_argument("evolution problem: initial state has eigenvalue " +
                                std::to_string(evals(0)) + " below -1e-10");
  }
  if (!(problem.dt > 0.0) || !std::isfinite(problem.dt)) {
    throw std::invalid_argument("evolution problem: dt must be positive and finite");
  }
  if (!(problem.t_max >= 0.0) || !std::isfinite(problem.t_max)) {
    throw std::invalid_argument("evolution problem: t_max must be non-negative and finite");
  }
}

ComplexMatrix rhs(const ComplexMatrix& rho, const EvolutionProblem& problem) {
  if (problem.sys.n_qubits != 3) {
    throw std::invalid_argument("rhs: the correlation model is three-qubit");
  }
  if (rho.rows() != 8 || rho.cols() != 8) {
    throw std::invalid_argument("rhs: state dimension does not match the three-qubit system");
  }
  const GeneratorContext ctx = make_context(problem);
  RhsWork work;
  work.resize(ctx.dim);
  ComplexMatrix out(ctx.dim, ctx.dim);
  rhs_into(ctx, rho, out, work);
  return out;
}

Trajectory integrate(const EvolutionProblem& problem, const std::vector<double>& sample_times) {
  validate(problem);

  const long long n_steps = step_count(problem.t_max, problem.dt);
  std::vector<long long> sample_steps;
  sample_steps.reserve(sample_times.size());
  double previous = -1.0;
  for (double t : sample_times) {
    if (!(t >= -1e-9) || t > problem.t_max + 0.5 * problem.dt) {
      throw std::invalid_argument("integrate: sample time " + std::to_string(t) +
                                  " outside [0, t_max]");
    }
    if (t < previous) {
      throw std::invalid_argument("integrate: sample times must be ascending");
    }
    previous = t;
    const long long idx = std::llround(t / problem.dt);
    sample_steps.push_back(std::min(idx, n_steps));
  }

  const GeneratorContext ctx = make_context(problem);
  Rk4Work work;
  work.resize(ctx.dim);

  Trajectory traj;
  traj.times.reserve(sample_steps.size());
  traj.states.reserve(sample_steps.size());

  ComplexMatrix rho = problem.rho0;
  std::size_t next = 0;
  for (long long step = 0; step <= n_steps; ++step) {
    traj.max_trace_drift = std::max(traj.max_trace_drift, trace_drift(rho));
    traj.max_hermiticity_drift = std::max(traj.max_hermiticity_drift, hermiticity_error(rho));
    while (next < sample_steps.size() && sample_steps[next] == step) {
      traj.times.push_back(static_cast<double>(step) * problem.dt);
      traj.states.push_back(cleaned(rho));
      ++next;
    }
    if (step < n_steps) rk4_step(ctx, rho, problem.dt, work);
  }
  return traj;
}

std::optional<double> esd_time(const EvolutionProblem& problem, double threshold,
                               std::optional<double> t_max) {
  validate(problem);
  if (!(threshold > 0.0)) {
    throw std::invalid_argument("esd_time: threshold must be positive");
  }
  const double horizon = t_max.value_or(problem.t_max);
  if (!(horizon >= 0.0) || !std::isfinite(horizon)) {
    throw std::invalid_argument("esd_time: horizon must be non-negative and finite");
  }

  const long long n_steps = step_count(horizon, problem.dt);
  const GeneratorContext ctx = make_context(problem);
  Rk4Work work;
  work.resize(ctx.dim);

  // Tripartite negativity on the full dt grid; with 8x8 eigensolves this
  // costs microseconds per step, so a complete scan is cheaper to reason
  // about than bracketing and refining.
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n_steps) + 1);
  ComplexMatrix rho = problem.rho0;
  for (long long step = 0; step <= n_steps; ++step) {
    values.push_back(tripartite_negativity(cleaned(rho)));
    if (step < n_steps) rk4_step(ctx, rho, problem.dt, work);
  }

  // Earliest grid time that is below threshold and never recovers.
  long long last_above = -1;
  for (long long step = n_steps; step >= 0; --step) {
    if (values[static_cast<std::size_t>(step)] >= threshold) {
      last_above = step;
      break;
    }
  }
  if (last_above == n_steps) return std::nullopt;
  return static_cast<double>(last_above + 1) * problem.dt;
}

}  // namespace qcorr
