#pragma once

#include <complex>

#include <Eigen/Dense>

namespace cspi::spin {

/// Spin-s representation, s = two_s/2. Basis ordered m = s, s-1, ..., -s.
struct SpinRep {
  int two_s;
  Eigen::MatrixXd sz;
  Eigen::MatrixXd sp;  // S_+
  Eigen::MatrixXd sm;  // S_-

  explicit SpinRep(int two_s);

  int dim() const { return two_s + 1; }
  double s() const { return 0.5 * two_s; }
};

/// Stereographically labeled coherent state, normalized e^{z S_-}
/// applied to the highest weight: components sqrt(C(2s,k)) z^k / (1+|z|^2)^s.
Eigen::VectorXcd spin_coherent(std::complex<double> z, int two_s);

/// Covariant symbol <z|op|z>; op must be (2s+1) x (2s+1).
std::complex<double> cov_symbol(const Eigen::MatrixXcd& op, int two_s,
                                std::complex<double> z);

/// (S_z^2)_cov - ((S_z)_cov)^2 from the matrices.
double product_symbol_gap(int two_s, std::complex<double> z);

/// Closed form 2s |z|^2 / (1 + |z|^2)^2 of the same gap.
double product_symbol_gap_closed(int two_s, std::complex<double> z);

}  // namespace cspi::spin
