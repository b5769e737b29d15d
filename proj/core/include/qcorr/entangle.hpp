#pragma once

#include "qcorr/matrix.hpp"

#include <array>

namespace qcorr {

// Negative negativity values above this magnitude indicate corrupted input
// rather than round-off and raise an error; smaller ones clamp to zero.
inline constexpr double kNegativityClampTol = 1e-10;

// All negativities of a three-qubit state at one time sample.
struct NegativityReport {
  double t = 0.0;
  double n_tri = 0.0;              // N_ABC
  std::array<double, 3> n_bipart{};  // N_A|BC, N_B|AC, N_C|AB
  std::array<double, 3> n_pair{};    // N_A|B, N_A|C, N_B|C
};

// sum |lambda_i| - 1 for a trace-one Hermitian spectrum, clamped at zero.
// Throws std::runtime_error below -kNegativityClampTol.
double negativity_from_spectrum(const RealVector& eigenvalues);

// One-vs-rest negativity ||rho^(T_qubit)||_1 - 1 of a three-qubit state,
// computed from the Hermitian eigenvalues of the partial transpose.
double bipartition_negativity(const ComplexMatrix& rho, int qubit);

// Negativity of the two-qubit reduction over {qubit_i, qubit_j} (third qubit
// traced out), transpose applied on qubit_j.  The measure is symmetric in
// which side is transposed; the second-argument convention is fixed for
// reproducibility.  Throws std::invalid_argument if qubit_i == qubit_j.
double pairwise_negativity(const ComplexMatrix& rho, int qubit_i, int qubit_j);

// Geometric mean of the three one-vs-rest negativities.
double tripartite_negativity(const ComplexMatrix& rho);

// All seven measures from the same input state, stamped with time t.
NegativityReport full_report(const ComplexMatrix& rho, double t);

}  // namespace qcorr
