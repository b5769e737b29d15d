#include "qcorr/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qcorr {

ComplexMatrix pauli(PauliAxis axis) {
  ComplexMatrix s(2, 2);
  const Complex i{0.0, 1.0};
  switch (axis) {
    case PauliAxis::X:
      s << 0, 1, 1, 0;
      break;
    case PauliAxis::Y:
      s << 0, -i, i, 0;
      break;
    case PauliAxis::Z:
      s << 1, 0, 0, -1;
      break;
  }
  return s;
}

ComplexMatrix pauli_embedded(PauliAxis axis, int target, int n_qubits) {
  if (n_qubits < 1) {
    throw std::invalid_argument("pauli_embedded: need at least one qubit");
  }
  if (target < 0 || target >= n_qubits) {
    throw std::invalid_argument("pauli_embedded: target " + std::to_string(target) +
                                " out of range for " + std::to_string(n_qubits) + " qubits");
  }
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  for (int q = 0; q < n_qubits; ++q) {
    out = kron(out, q == target ? pauli(axis) : id2);
  }
  return out;
}

ComplexMatrix hamiltonian_sys(const SystemConfig& sys) {
  if (sys.n_qubits < 1) {
    throw std::invalid_argument("hamiltonian_sys: need at least one qubit");
  }
  if (!std::isfinite(sys.omega)) {
    throw std::invalid_argument("hamiltonian_sys: omega must be finite");
  }
  const Eigen::Index dim = Eigen::Index{1} << sys.n_qubits;
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    // Each |0> bit contributes +1 to the sigma_z sum, each |1> bit -1.
    const int ones = static_cast<int>(__builtin_popcountll(static_cast<unsigned long long>(idx)));
    h(idx, idx) = 0.5 * sys.omega * (sys.n_qubits - 2 * ones);
  }
  return h;
}

ComplexVector ghz_vector() {
  ComplexVector psi = ComplexVector::Zero(8);
  psi(0) = psi(7) = 1.0 / std::sqrt(2.0);
  return psi;
}

ComplexVector w_vector() {
  ComplexVector psi = ComplexVector::Zero(8);
  psi(1) = psi(2) = psi(4) = 1.0 / std::sqrt(3.0);  // |001>, |010>, |100>
  return psi;
}

ComplexVector ghzw_vector(const SuperpositionSpec& mix) {
  if (!(mix.p >= 0.0 && mix.p <= 1.0)) {
    throw std::invalid_argument("ghzw_vector: mixing weight p must lie in [0, 1]");
  }
  // <W|GHZ> = 0, so the combination is normalized as written.
  return std::sqrt(1.0 - mix.p) * w_vector() + std::sqrt(mix.p) * ghz_vector();
}

ComplexMatrix density(const ComplexVector& psi) {
  const double norm2 = psi.squaredNorm();
  if (!(norm2 > 0.0)) {
    throw std::invalid_argument("density: zero state vector");
  }
  return (psi * psi.adjoint()) / norm2;
}

ComplexMatrix ghz_state() { return density(ghz_vector()); }

ComplexMatrix w_state() { return density(w_vector()); }

ComplexMatrix ghzw_superposition(const SuperpositionSpec& mix) { return density(ghzw_vector(mix)); }

}  // namespace qcorr
