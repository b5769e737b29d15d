#pragma once

#include "qcorr/matrix.hpp"
#include "qcorr/noise.hpp"
#include "qcorr/states.hpp"

#include <optional>
#include <vector>

namespace qcorr {

// Coupling operator family: sigma_z on every qubit (dephasing, phase damage
// only) or sigma_x on every qubit (amplitude noise, population transfer).
enum class NoiseChannel { Dephasing, Amplitude };

// One well-posed evolution: initial state, channel, correlated rates, and
// the fixed-step time grid.  Times are in units of 1/gamma.
struct EvolutionProblem {
  SystemConfig sys{};
  NoiseChannel channel = NoiseChannel::Dephasing;
  CorrelationSpec corr{};
  ComplexMatrix rho0;
  double t_max = 1.0;
  double dt = 1e-3;
};

// Throws InvalidCorrelationError for an unphysical correlation spec and
// std::invalid_argument for any other defect (dimension mismatch, non-
// Hermitian / non-normalized / non-positive rho0, dt <= 0, t_max < 0).
void validate(const EvolutionProblem& problem);

// Time series of recorded states.  Drift fields are diagnostics measured on
// the raw integrator state at every step, before the per-sample cleanup.
struct Trajectory {
  std::vector<double> times;
  std::vector<ComplexMatrix> states;
  double max_trace_drift = 0.0;        // max |tr(rho) - 1|
  double max_hermiticity_drift = 0.0;  // max entrywise |rho - rho^dagger|
};

// Master-equation right-hand side
//   -i[H_sys, rho] - sum_j gamma (rho - s_j rho s_j)
//   - sum_{j<k} G_jk (s_j s_k rho + rho s_j s_k - s_j rho s_k - s_k rho s_j)
// with s_j the channel's Pauli on qubit j.  Hermitian and traceless for
// Hermitian input.  The GHZ coherence (0,7) decays at exactly
// 6*gamma + 4*(G_AB + G_AC + G_BC), the anchor that fixes every sign and
// factor convention in this module.
ComplexMatrix rhs(const ComplexMatrix& rho, const EvolutionProblem& problem);

// Classical fixed-step RK4 over step dt.  Each requested sample time is
// recorded at the nearest grid point; recorded states are re-symmetrized
// (rho + rho^dagger)/2 and trace-renormalized when |tr - 1| > 1e-12.  The
// marching state itself is never adjusted, so the drift diagnostics are
// honest.  sample_times must be ascending and within [0, t_max].
Trajectory integrate(const EvolutionProblem& problem, const std::vector<double>& sample_times);

// Earliest time at which the tripartite negativity drops below `threshold`
// and stays below it through the horizon (t_max override, else
// problem.t_max), resolved on the dt grid by a full scan; nullopt when the
// negativity is still above threshold at the horizon.  The stays-below guard
// keeps a grazing minimum followed by a revival from being misread as death.
std::optional<double> esd_time(const EvolutionProblem& problem, double threshold = 1e-6,
                               std::optional<double> t_max = std::nullopt);

}  // namespace qcorr
