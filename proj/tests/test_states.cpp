#include "qcorr/states.hpp"

#include <doctest.h>

#include <cmath>

using namespace qcorr;

TEST_CASE("hamiltonian_sys diagonal follows the magnetization ladder") {
  SystemConfig sys;
  sys.omega = 2.0;
  const ComplexMatrix h = hamiltonian_sys(sys);
  const double expected[8] = {3, 1, 1, -1, 1, -1, -1, -3};
  for (int i = 0; i < 8; ++i) {
    CHECK(h(i, i).real() == doctest::Approx(expected[i]).epsilon(1e-15));
    CHECK(h(i, i).imag() == 0.0);
  }
  CHECK(h.cwiseAbs().sum() == doctest::Approx(12.0));  // diagonal only
}

TEST_CASE("pauli_embedded places the operator on the right qubit") {
  // sigma_z on qubit A flips sign for indices with bit 2 set.
  const ComplexMatrix za = pauli_embedded(PauliAxis::Z, 0, 3);
  for (int i = 0; i < 8; ++i) {
    CHECK(za(i, i).real() == doctest::Approx(i < 4 ? 1.0 : -1.0));
  }
  // sigma_x on qubit C swaps the least significant bit.
  const ComplexMatrix xc = pauli_embedded(PauliAxis::X, 2, 3);
  for (int i = 0; i < 8; ++i) {
    CHECK(xc(i, i ^ 1).real() == doctest::Approx(1.0));
    CHECK(xc(i, i).real() == doctest::Approx(0.0));
  }
  CHECK_THROWS_AS(pauli_embedded(PauliAxis::X, 3, 3), std::invalid_argument);
}

TEST_CASE("canonical states have the expected amplitudes") {
  const ComplexMatrix ghz = ghz_state();
  CHECK(ghz(0, 0).real() == doctest::Approx(0.5));
  CHECK(ghz(7, 7).real() == doctest::Approx(0.5));
  CHECK(ghz(0, 7).real() == doctest::Approx(0.5));
  CHECK(std::abs(ghz.trace().real() - 1.0) < 1e-15);

  const ComplexMatrix w = w_state();
  for (int i : {1, 2, 4}) {
    for (int j : {1, 2, 4}) {
      CHECK(w(i, j).real() == doctest::Approx(1.0 / 3.0));
    }
  }
  CHECK(std::abs(w.trace().real() - 1.0) < 1e-15);
  CHECK(w(0, 0).real() == doctest::Approx(0.0));
}

TEST_CASE("ghzw interpolation matches its endpoints and stays normalized") {
  SuperpositionSpec mix;
  mix.p = 1.0;
  CHECK((ghzw_superposition(mix) - ghz_state()).cwiseAbs().maxCoeff() < 1e-15);
  mix.p = 0.0;
  CHECK((ghzw_superposition(mix) - w_state()).cwiseAbs().maxCoeff() < 1e-15);
  mix.p = 0.37;
  const ComplexMatrix rho = ghzw_superposition(mix);
  CHECK(std::abs(rho.trace().real() - 1.0) < 1e-14);
  // |W> and |GHZ> are orthogonal, so the weights add directly.
  CHECK(rho(0, 0).real() == doctest::Approx(0.37 / 2.0).epsilon(1e-12));
  CHECK(rho(1, 1).real() == doctest::Approx(0.63 / 3.0).epsilon(1e-12));

  mix.p = 1.2;
  CHECK_THROWS_AS(ghzw_superposition(mix), std::invalid_argument);
  mix.p = -0.1;
  CHECK_THROWS_AS(ghzw_superposition(mix), std::invalid_argument);
}

TEST_CASE("density normalizes unnormalized vectors") {
  ComplexVector psi = ComplexVector::Zero(4);
  psi(0) = Complex(3.0, 0.0);
  psi(3) = Complex(0.0, 4.0);
  const ComplexMatrix rho = density(psi);
  CHECK(std::abs(rho.trace().real() - 1.0) < 1e-14);
  CHECK(rho(0, 0).real() == doctest::Approx(0.36));
  CHECK(rho(3, 3).real() == doctest::Approx(0.64));
}
