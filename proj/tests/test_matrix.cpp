#include "qcorr/matrix.hpp"
#include "qcorr/states.hpp"

#include <doctest.h>

#include <cmath>

using namespace qcorr;

namespace {

ComplexMatrix random_hermitian(int dim, unsigned seed) {
  ComplexMatrix m(dim, dim);
  // Small deterministic LCG; quality is irrelevant, reproducibility is not.
  std::uint64_t state = seed * 2654435761u + 1;
  auto next = [&state]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(state >> 11) * 0x1.0p-53 - 0.5;
  };
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) m(r, c) = Complex(next(), next());
  }
  return symmetrized(m);
}

}  // namespace

TEST_CASE("qubit_count accepts powers of two and rejects the rest") {
  CHECK(qubit_count(ComplexMatrix::Identity(2, 2)) == 1);
  CHECK(qubit_count(ComplexMatrix::Identity(8, 8)) == 3);
  CHECK_THROWS_AS(qubit_count(ComplexMatrix::Identity(6, 6)), std::invalid_argument);
  CHECK_THROWS_AS(qubit_count(ComplexMatrix::Zero(4, 8)), std::invalid_argument);
}

TEST_CASE("kron reproduces hand-computed sigma_z (x) sigma_x") {
  const ComplexMatrix z = pauli(PauliAxis::Z);
  const ComplexMatrix x = pauli(PauliAxis::X);
  const ComplexMatrix k = kron(z, x);
  REQUIRE(k.rows() == 4);
  CHECK(k(0, 1) == Complex(1.0, 0.0));
  CHECK(k(1, 0) == Complex(1.0, 0.0));
  CHECK(k(2, 3) == Complex(-1.0, 0.0));
  CHECK(k(3, 2) == Complex(-1.0, 0.0));
  CHECK(k(0, 0) == Complex(0.0, 0.0));
  CHECK(k.cwiseAbs().sum() == doctest::Approx(4.0));
}

TEST_CASE("partial_trace recovers the factors of a product state") {
  ComplexMatrix a(2, 2), b(2, 2), c(2, 2);
  a << 0.7, Complex(0.1, 0.2), Complex(0.1, -0.2), 0.3;
  b << 0.4, Complex(0.0, -0.1), Complex(0.0, 0.1), 0.6;
  c << 0.9, 0.05, 0.05, 0.1;
  const ComplexMatrix rho = kron(kron(a, b), c);

  CHECK(frobenius_distance(partial_trace(rho, {0}), a) < 1e-14);
  CHECK(frobenius_distance(partial_trace(rho, {1}), b) < 1e-14);
  CHECK(frobenius_distance(partial_trace(rho, {2}), c) < 1e-14);
  CHECK(frobenius_distance(partial_trace(rho, {0, 2}), kron(a, c)) < 1e-14);
  CHECK(frobenius_distance(partial_trace(rho, {1, 2}), kron(b, c)) < 1e-14);
  CHECK(std::abs(partial_trace(rho, {1}).trace().real() - 1.0) < 1e-14);
  CHECK_THROWS_AS(partial_trace(rho, {}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, {3}), std::invalid_argument);
}

TEST_CASE("partial_transpose is an involution and preserves trace") {
  const ComplexMatrix rho = random_hermitian(8, 11);
  for (int q = 0; q < 3; ++q) {
    const ComplexMatrix pt = partial_transpose(rho, {q});
    CHECK(std::abs((pt.trace() - rho.trace()).real()) < 1e-14);
    CHECK(hermiticity_error(pt) < 1e-14);
    CHECK(frobenius_distance(partial_transpose(pt, {q}), rho) < 1e-14);
  }
  // Transposing all three qubits is the full transpose.
  CHECK(frobenius_distance(partial_transpose(rho, {0, 1, 2}), rho.transpose()) < 1e-14);
}

TEST_CASE("GHZ partial transpose has the known spectrum") {
  const RealVector ev = hermitian_eigenvalues(partial_transpose(ghz_state(), {0}));
  REQUIRE(ev.size() == 8);
  CHECK(ev(0) == doctest::Approx(-0.5).epsilon(1e-12));
  for (int i = 1; i <= 4; ++i) CHECK(std::abs(ev(i)) < 1e-12);
  for (int i = 5; i <= 7; ++i) CHECK(ev(i) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("hermitian_eigenvalues sorts ascending and rejects non-Hermitian input") {
  ComplexMatrix m(2, 2);
  m << 2.0, 1.0, 1.0, -1.0;
  const RealVector ev = hermitian_eigenvalues(m);
  CHECK(ev(0) < ev(1));
  CHECK(ev(0) == doctest::Approx(0.5 - std::sqrt(3.25)).epsilon(1e-12));
  CHECK(ev(1) == doctest::Approx(0.5 + std::sqrt(3.25)).epsilon(1e-12));

  ComplexMatrix bad(2, 2);
  bad << 1.0, 1.0, -1.0, 1.0;
  CHECK_THROWS_AS(hermitian_eigenvalues(bad), std::invalid_argument);
}

TEST_CASE("linspace hits both endpoints exactly") {
  const std::vector<double> v = linspace(0.0, 2.0, 5);
  REQUIRE(v.size() == 5);
  CHECK(v.front() == 0.0);
  CHECK(v.back() == 2.0);
  CHECK(v[2] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(linspace(1.5, 9.0, 1) == std::vector<double>{1.5});
}

TEST_CASE("symmetrized and frobenius_distance behave as documented") {
  ComplexMatrix m(2, 2);
  m << 1.0, Complex(0.0, 2.0), 0.0, 1.0;
  const ComplexMatrix s = symmetrized(m);
  CHECK(hermiticity_error(s) < 1e-15);
  CHECK(s(0, 1) == Complex(0.0, 1.0));
  CHECK(frobenius_distance(m, m) == 0.0);
  CHECK(frobenius_distance(ComplexMatrix::Identity(2, 2), ComplexMatrix::Zero(2, 2)) ==
        doctest::Approx(std::sqrt(2.0)));
}
