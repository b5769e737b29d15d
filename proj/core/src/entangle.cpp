#include "qcorr/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qcorr {

namespace {

void check_three_qubits(const ComplexMatrix& rho, const char* what) {
  if (rho.rows() != 8 || rho.cols() != 8) {
    throw std::invalid_argument(std::string(what) + ": expected an 8x8 three-qubit state, got " +
                                std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()));
  }
}

// Negativity of rho under partial transposition of `transposed` within the
// (possibly reduced) register.
double negativity_of(const ComplexMatrix& rho, int transposed) {
  const ComplexMatrix pt = partial_transpose(symmetrized(rho), {transposed});
  return negativity_from_spectrum(hermitian_eigenvalues(pt));
}

}  // namespace

double negativity_from_spectrum(const RealVector& eigenvalues) {
  const double value = eigenvalues.cwiseAbs().sum() - 1.0;
  if (value < -kNegativityClampTol) {
    throw std::runtime_error("negativity " + std::to_string(value) +
                             " below the round-off clamp; input is not a trace-one state");
  }
  return std::max(value, 0.0);
}

double bipartition_negativity(const ComplexMatrix& rho, int qubit) {
  check_three_qubits(rho, "bipartition_negativity");
  if (qubit < 0 || qubit > 2) {
    throw std::invalid_argument("bipartition_negativity: qubit must be 0, 1, or 2");
  }
  return negativity_of(rho, qubit);
}

double pairwise_negativity(const ComplexMatrix& rho, int qubit_i, int qubit_j) {
  check_three_qubits(rho, "pairwise_negativity");
  if (qubit_i == qubit_j) {
    throw std::invalid_argument("pairwise_negativity: the two qubits must differ");
  }
  if (qubit_i < 0 || qubit_i > 2 || qubit_j < 0 || qubit_j > 2) {
    throw std::invalid_argument("pairwise_negativity: qubit indices must be 0, 1, or 2");
  }
  const int lo = std::min(qubit_i, qubit_j);
  const int hi = std::max(qubit_i, qubit_j);
  const ComplexMatrix reduced = partial_trace(rho, {lo, hi});
  // Position of qubit_j inside the two-qubit reduction (kept qubits keep
  // their ascending order).
  const int pos_j = qubit_j == hi ? 1 : 0;
  return negativity_of(reduced, pos_j);
}

double tripartite_negativity(const ComplexMatrix& rho) {
  check_three_qubits(rho, "tripartite_negativity");
  double product = 1.0;
  for (int qubit = 0; qubit < 3; ++qubit) {
    product *= negativity_of(rho, qubit);
  }
  return std::cbrt(product);
}

NegativityReport full_report(const ComplexMatrix& rho, double t) {
  check_three_qubits(rho, "full_report");
  NegativityReport report;
  report.t = t;
  double product = 1.0;
  for (int qubit = 0; qubit < 3; ++qubit) {
    report.n_bipart[static_cast<std::size_t>(qubit)] = negativity_of(rho, qubit);
    product *= report.n_bipart[static_cast<std::size_t>(qubit)];
  }
  report.n_tri = std::cbrt(product);
  report.n_pair[0] = pairwise_negativity(rho, 0, 1);  // A|B
  report.n_pair[1] = pairwise_negativity(rho, 0, 2);  // A|C
  report.n_pair[2] = pairwise_negativity(rho, 1, 2);  // B|C
  return report;
}

}  // namespace qcorr
