#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace qcorr {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Tolerance below which an almost-Hermitian matrix is accepted by the
// eigenvalue routine.  Fixed-step integration produces asymmetry well below
// this (~1e-13); anything larger indicates a logic error upstream.
inline constexpr double kHermTol = 1e-10;

// Qubit labels follow A=0, B=1, C=2 with tensor ordering A (x) B (x) C:
// qubit A is the most significant bit of a computational-basis index, so
// |abc> lives at index 4a + 2b + c.

// Number of qubits n for a square matrix of dimension 2^n.
// Throws std::invalid_argument if the matrix is not square or the dimension
// is not a power of two.
int qubit_count(const ComplexMatrix& m);

// Standard Kronecker product; dimensions multiply.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Reduced matrix over the kept qubits (ascending index order), summing out
// the rest.  `keep` must be non-empty with every index in range; duplicates
// are ignored.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<int>& keep);

// Transpose applied to the indices of the named qubits only.  Hermiticity
// and trace are preserved for Hermitian input.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const std::vector<int>& subsystem);

// Real eigenvalues in ascending order.  The input must be Hermitian within
// kHermTol (max entrywise |m - m^dagger|); it is symmetrized internally
// before the solve so residuals hold against the exact Hermitian part.
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

// max_ij |m_ij - conj(m_ji)|
double hermiticity_error(const ComplexMatrix& m);

// (m + m^dagger) / 2
ComplexMatrix symmetrized(const ComplexMatrix& m);

// ||a - b||_F
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

// n evenly spaced values from a to b inclusive (n >= 2), or {a} for n == 1.
std::vector<double> linspace(double a, double b, int n);

}  // namespace qcorr
