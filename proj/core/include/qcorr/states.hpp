#pragma once

#include "qcorr/matrix.hpp"

namespace qcorr {

enum class PauliAxis { X, Y, Z };

// Coherent part of the dynamics: H_sys = (omega/2) * sum_j sigma_z^(j),
// identical transition frequency omega for every qubit (units of the local
// noise rate).
struct SystemConfig {
  int n_qubits = 3;
  double omega = 0.0;
};

// Mixing weight for the GHZ/W interpolation sqrt(1-p)|W> + sqrt(p)|GHZ>:
// p = 0 is the pure W state, p = 1 the pure GHZ state.
struct SuperpositionSpec {
  double p = 0.0;
};

// Single-qubit Pauli matrix (2x2).
ComplexMatrix pauli(PauliAxis axis);

// I (x) ... (x) sigma_axis (x) ... (x) I with the Pauli at position `target`
// of an n-qubit register.  Throws std::invalid_argument if target is out of
// range or n_qubits < 1.
ComplexMatrix pauli_embedded(PauliAxis axis, int target, int n_qubits);

// Diagonal system Hamiltonian; for n = 3 the diagonal is
// (omega/2) * (3, 1, 1, -1, 1, -1, -1, -3) in basis order |000> ... |111>.
ComplexMatrix hamiltonian_sys(const SystemConfig& sys);

// State vectors of the canonical three-qubit states.
ComplexVector ghz_vector();
ComplexVector w_vector();
ComplexVector ghzw_vector(const SuperpositionSpec& mix);

// |psi><psi| / <psi|psi>
ComplexMatrix density(const ComplexVector& psi);

// Pure-state density matrices of the canonical states.
ComplexMatrix ghz_state();
ComplexMatrix w_state();
ComplexMatrix ghzw_superposition(const SuperpositionSpec& mix);

}  // namespace qcorr
