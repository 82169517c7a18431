#pragma once

#include <complex>
#include <vector>

namespace cspi::quadrature {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Laguerre rule for weight e^{-t} on [0, inf), exact for
/// polynomials of degree <= 2n - 1. Golub-Welsch on the Jacobi matrix.
Rule gauss_laguerre(int n);

/// Gauss-Legendre rule on [-1, 1].
Rule gauss_legendre(int n);

/// Phase-space grid realizing int d^2z/pi e^{-|z|^2} f(zbar, z):
/// radial Gauss-Laguerre abscissae t_i crossed with Q_a uniform angles,
/// nodes z_p = sqrt(t_i) e^{i phi_a}, weights w_i / Q_a.
///
/// The coherent-state overlap identity
///   sum_p weight_p e^{t_p} <m|z_p><z_p|n> = delta_mn
/// holds to roundoff exactly when m, n <= 2 Q_r - 1 and |m - n| < Q_a;
/// outside that range the angular sum aliases (m = n mod Q_a) or the
/// radial rule runs out of exactness.
class QuadratureGrid {
 public:
  QuadratureGrid(int radial_order, int angular_order);

  int radial_order() const { return radial_order_; }
  int angular_order() const { return angular_order_; }
  int size() const { return static_cast<int>(nodes_.size()); }

  const std::vector<std::complex<double>>& nodes() const { return nodes_; }
  /// Raw measure weights w_i^{GL}/Q_a; the e^{+t} factor of the measure
  /// and the e^{-|z|^2/2} kernel normalizations cancel and are never
  /// formed (overflow for large nodes).
  const std::vector<double>& node_weights() const { return weights_; }
  /// |z_p|^2 = t_i of the node's radial shell.
  const std::vector<double>& node_t() const { return node_t_; }

  double max_radial_node() const;

  bool identity_guaranteed(int m, int n) const;
  /// |sum_p w_p e^{t_p} <m|z_p><z_p|n> - delta_mn| by direct summation.
  double identity_deviation(int m, int n) const;
  /// max over 0 <= m, n <= max_level.
  double max_identity_deviation(int max_level) const;

 private:
  int radial_order_;
  int angular_order_;
  Rule radial_;
  std::vector<std::complex<double>> nodes_;
  std::vector<double> weights_;
  std::vector<double> node_t_;
};

}  // namespace cspi::quadrature
