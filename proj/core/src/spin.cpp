#include "cspi/spin.hpp"

#include <cmath>
#include <stdexcept>

namespace cspi::spin {

SpinRep::SpinRep(int two_s) : two_s(two_s) {
  if (two_s < 1) throw std::invalid_argument("need 2s >= 1");
  const int d = two_s + 1;
  const double s = 0.5 * two_s;
  sz = Eigen::MatrixXd::Zero(d, d);
  sp = Eigen::MatrixXd::Zero(d, d);
  sm = Eigen::MatrixXd::Zero(d, d);
  // Row k holds m = s - k.
  for (int k = 0; k < d; ++k) sz(k, k) = s - k;
  for (int k = 1; k < d; ++k) {
    const double m = s - k;  // S_+ |s,m> = sqrt(s(s+1) - m(m+1)) |s,m+1>
    sp(k - 1, k) = std::sqrt(s * (s + 1) - m * (m + 1));
  }
  sm = sp.transpose();
}

Eigen::VectorXcd spin_coherent(std::complex<double> z, int two_s) {
  if (two_s < 1) throw std::invalid_argument("need 2s >= 1");
  const int d = two_s + 1;
  Eigen::VectorXcd v(d);
  // sqrt(C(2s,k)) z^k, normalized by (1+|z|^2)^s.
  std::complex<double> amp = 1.0;
  v(0) = amp;
  for (int k = 1; k < d; ++k) {
    amp *= z * std::sqrt(static_cast<double>(two_s - k + 1) / k);
    v(k) = amp;
  }
  v /= std::pow(1.0 + std::norm(z), 0.5 * two_s);
  return v;
}

std::complex<double> cov_symbol(const Eigen::MatrixXcd& op, int two_s,
                                std::complex<double> z) {
  if (op.rows() != two_s + 1 || op.cols() != two_s + 1)
    throw std::invalid_argument("operator dimension does not match 2s+1");
  const Eigen::VectorXcd v = spin_coherent(z, two_s);
  return v.dot(op * v);  // dot conjugates the left argument
}

double product_symbol_gap(int two_s, std::complex<double> z) {
  const SpinRep rep(two_s);
  const Eigen::MatrixXcd sz = rep.sz.cast<std::complex<double>>();
  const std::complex<double> first = cov_symbol(sz * sz, two_s, z);
  const std::complex<double> second = cov_symbol(sz, two_s, z);
  return first.real() - second.real() * second.real();
}

double product_symbol_gap_closed(int two_s, std::complex<double> z) {
  const double t = std::norm(z);
  return two_s * t / ((1.0 + t) * (1.0 + t));
}

}  // namespace cspi::spin
