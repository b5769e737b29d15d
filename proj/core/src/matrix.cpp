#include "qcorr/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qcorr {

namespace {

// Validates and normalizes a qubit index list: in-range, sorted, unique.
std::vector<int> normalized_qubits(const std::vector<int>& qubits, int n, const char* what) {
  std::vector<int> out = qubits;
  for (int q : out) {
    if (q < 0 || q >= n) {
      throw std::invalid_argument(std::string(what) + ": qubit index " + std::to_string(q) +
                                  " out of range for " + std::to_string(n) + " qubits");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Bit position of qubit q in a basis index (qubit A = most significant bit).
inline int bit_of(int qubit, int n) { return n - 1 - qubit; }

}  // namespace

int qubit_count(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw std::invalid_argument("qubit_count: matrix must be square and non-empty");
  }
  const auto dim = m.rows();
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim) {
    throw std::invalid_argument("qubit_count: dimension " + std::to_string(dim) +
                                " is not a power of two");
  }
  return n;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<int>& keep) {
  const int n = qubit_count(rho);
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: keep set must be non-empty");
  }
  const std::vector<int> kept = normalized_qubits(keep, n, "partial_trace");

  std::vector<int> traced;
  for (int q = 0; q < n; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }

  const int k = static_cast<int>(kept.size());
  const int m = n - k;
  const Eigen::Index dim_out = Eigen::Index{1} << k;
  const Eigen::Index dim_env = Eigen::Index{1} << m;

  // Scatter the bits of a compact subsystem index onto the full-register bit
  // positions of the listed qubits (list order = descending significance).
  auto scatter = [n](Eigen::Index bits, const std::vector<int>& qubits) {
    Eigen::Index idx = 0;
    const int nq = static_cast<int>(qubits.size());
    for (int a = 0; a < nq; ++a) {
      if ((bits >> (nq - 1 - a)) & 1) idx |= Eigen::Index{1} << bit_of(qubits[a], n);
    }
    return idx;
  };

  ComplexMatrix out = ComplexMatrix::Zero(dim_out, dim_out);
  for (Eigen::Index r = 0; r < dim_out; ++r) {
    const Eigen::Index row_kept = scatter(r, kept);
    for (Eigen::Index c = 0; c < dim_out; ++c) {
      const Eigen::Index col_kept = scatter(c, kept);
      Complex sum = 0.0;
      for (Eigen::Index e = 0; e < dim_env; ++e) {
        const Eigen::Index env = scatter(e, traced);
        sum += rho(row_kept | env, col_kept | env);
      }
      out(r, c) = sum;
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const std::vector<int>& subsystem) {
  const int n = qubit_count(rho);
  const std::vector<int> subs = normalized_qubits(subsystem, n, "partial_transpose");

  Eigen::Index mask = 0;
  for (int q : subs) mask |= Eigen::Index{1} << bit_of(q, n);

  const Eigen::Index dim = rho.rows();
  ComplexMatrix out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const Eigen::Index rt = (r & ~mask) | (c & mask);
      const Eigen::Index ct = (c & ~mask) | (r & mask);
      out(rt, ct) = rho(r, c);
    }
  }
  return out;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
  }
  const double asym = hermiticity_error(m);
  if (!(asym <= kHermTol)) {
    throw std::invalid_argument("hermitian_eigenvalues: input deviates from Hermitian by " +
                                std::to_string(asym) + " (tolerance 1e-10)");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(symmetrized(m),
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: eigensolver failed to converge");
  }
  return solver.eigenvalues();
}

double hermiticity_error(const ComplexMatrix& m) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

ComplexMatrix symmetrized(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).norm();
}

std::vector<double> linspace(double a, double b, int n) {
  if (n < 1) throw std::invalid_argument("linspace: need at least one sample");
  if (n == 1) return {a};
  std::vector<double> out(static_cast<std::size_t>(n));
  const double step = (b - a) / (n - 1);
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = a + step * i;
  out.back() = b;  // exact endpoint regardless of rounding
  return out;
}

}  // namespace qcorr
