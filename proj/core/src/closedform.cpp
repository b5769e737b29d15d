#include "qcorr/closedform.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qcorr {

namespace {

void check_time(const DephasingParams& par) {
  if (!(par.t >= 0.0)) {
    throw std::invalid_argument("dephasing closed form: t must be >= 0");
  }
}

// log(e^a + e^b) with the larger exponent factored out, safe for a, b of
// order 8*gamma*t ~ 100 where the naive sum overflows.
double log_sum_exp(double a, double b) {
  const double m = std::max(a, b);
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

// The two cross rates touching each qubit, as indices into cross[] =
// (G_AB, G_AC, G_BC): A touches (AB, AC), B touches (AB, BC), C (AC, BC).
constexpr int kTouch[3][2] = {{0, 1}, {0, 2}, {1, 2}};

}  // namespace

double ghz_negativity_dephasing(const DephasingParams& par) {
  check_time(par);
  const double sum = par.cross[0] + par.cross[1] + par.cross[2];
  return std::exp(-6.0 * par.gamma * par.t - 4.0 * sum * par.t);
}

double w_bipartition_negativity_dephasing(const DephasingParams& par, int qubit) {
  check_time(par);
  if (qubit < 0 || qubit > 2) {
    throw std::invalid_argument("w_bipartition_negativity_dephasing: qubit must be 0, 1, or 2");
  }
  const double a = 8.0 * par.cross[kTouch[qubit][0]] * par.t;
  const double b = 8.0 * par.cross[kTouch[qubit][1]] * par.t;
  // (2/3) e^{-4 gamma t} sqrt(e^a + e^b), evaluated in log space.
  return (2.0 / 3.0) * std::exp(-4.0 * par.gamma * par.t + 0.5 * log_sum_exp(a, b));
}

double w_tripartite_negativity_dephasing(const DephasingParams& par) {
  check_time(par);
  double sixth_logs = 0.0;
  for (int qubit = 0; qubit < 3; ++qubit) {
    const double a = 8.0 * par.cross[kTouch[qubit][0]] * par.t;
    const double b = 8.0 * par.cross[kTouch[qubit][1]] * par.t;
    sixth_logs += log_sum_exp(a, b);
  }
  // Geometric mean of the three bipartition values: the sqrt in each becomes
  // a sixth root of the product.
  return (2.0 / 3.0) * std::exp(-4.0 * par.gamma * par.t + sixth_logs / 6.0);
}

ComplexMatrix evolve_dephasing(const ComplexMatrix& rho0, const SystemConfig& sys,
                               const CorrelationSpec& corr, double t) {
  if (sys.n_qubits != 3) {
    throw std::invalid_argument("evolve_dephasing: three-qubit systems only");
  }
  if (rho0.rows() != 8 || rho0.cols() != 8) {
    throw std::invalid_argument("evolve_dephasing: state must be 8x8");
  }
  if (!(t >= 0.0)) {
    throw std::invalid_argument("evolve_dephasing: t must be >= 0");
  }

  // sigma_z signature s_q = +/-1 of each qubit in each basis state.
  auto sig = [](Eigen::Index idx, int qubit) { return 1 - 2 * static_cast<int>((idx >> (2 - qubit)) & 1); };
  const double cross[3] = {corr.gamma_ab, corr.gamma_ac, corr.gamma_bc};
  constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};  // (A,B), (A,C), (B,C)

  ComplexMatrix out(8, 8);
  for (Eigen::Index r = 0; r < 8; ++r) {
    for (Eigen::Index c = 0; c < 8; ++c) {
      double rate = 0.0;
      for (int q = 0; q < 3; ++q) {
        rate += corr.gamma * (1.0 - sig(r, q) * sig(c, q));
      }
      for (int p = 0; p < 3; ++p) {
        const int q1 = kPairs[p][0], q2 = kPairs[p][1];
        rate += cross[p] * (sig(r, q1) - sig(c, q1)) * (sig(r, q2) - sig(c, q2));
      }
      // Energy difference E_r - E_c = (omega/2) * (sum_q s_q^r - sum_q s_q^c).
      int ssum = 0;
      for (int q = 0; q < 3; ++q) ssum += sig(r, q) - sig(c, q);
      const double de = 0.5 * sys.omega * ssum;
      out(r, c) = rho0(r, c) * std::exp(-rate * t) * std::polar(1.0, -de * t);
    }
  }
  return out;
}

}  // namespace qcorr
