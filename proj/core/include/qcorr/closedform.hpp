#pragma once

#include "qcorr/matrix.hpp"
#include "qcorr/noise.hpp"
#include "qcorr/states.hpp"

#include <array>

namespace qcorr {

// Inputs to the analytic dephasing negativity formulas at one instant.
// Validity of the correlation triple is not required here: the formulas are
// evaluated as written, and scan drivers only feed valid specs.
struct DephasingParams {
  double gamma = 1.0;
  std::array<double, 3> cross{};  // (G_AB, G_AC, G_BC), absolute rates
  double t = 0.0;
};

// GHZ tripartite negativity under pure dephasing:
//   exp(-6*gamma*t - 4*(G_AB + G_AC + G_BC)*t).
double ghz_negativity_dephasing(const DephasingParams& par);

// W one-vs-rest negativity for bipartition qubit|rest:
//   (2/3) * exp(-4*gamma*t) * sqrt(exp(8*G_ij*t) + exp(8*G_ik*t))
// where G_ij, G_ik are the two cross rates touching `qubit`.  Evaluated in
// log space so large positive exponents (G = gamma, t ~ 10/gamma) cannot
// overflow.
double w_bipartition_negativity_dephasing(const DephasingParams& par, int qubit);

// W tripartite negativity: geometric mean of the three bipartition values,
//   (2/3) * exp(-4*gamma*t) * prod_i (exp(8*G_ij*t) + exp(8*G_ik*t))^(1/6).
double w_tripartite_negativity_dephasing(const DephasingParams& par);

// Exact dephasing propagator for arbitrary three-qubit states: populations
// are frozen while each coherence (m, n) picks up the phase of the energy
// difference and decays at
//   gamma * sum_q (1 - s_q^m s_q^n)
//     + sum_{q<q'} G_qq' (s_q^m - s_q^n)(s_q'^m - s_q'^n)
// with s_q the sigma_z signature (+1/-1) of basis state bit q.  This is the
// fast evaluator behind closed-form scans and an independent cross-check of
// the time-stepping integrator.
ComplexMatrix evolve_dephasing(const ComplexMatrix& rho0, const SystemConfig& sys,
                               const CorrelationSpec& corr, double t);

}  // namespace qcorr
