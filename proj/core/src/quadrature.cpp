#include "cspi/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace cspi::quadrature {

namespace {

// Golub-Welsch: nodes are the eigenvalues of the symmetric Jacobi matrix
// of the orthogonal-polynomial recurrence, weights mu0 * v0^2.
Rule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& subdiag,
                  double mu0) {
  const int n = static_cast<int>(diag.size());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, subdiag, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("quadrature node computation failed to converge");
  Rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

}  // namespace

Rule gauss_laguerre(int n) {
  if (n < 1) throw std::invalid_argument("quadrature order must be positive");
  Eigen::VectorXd diag(n), sub(n - 1);
  for (int k = 0; k < n; ++k) diag(k) = 2.0 * k + 1.0;
  for (int k = 1; k < n; ++k) sub(k - 1) = static_cast<double>(k);
  return golub_welsch(diag, sub, 1.0);
}

Rule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("quadrature order must be positive");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  for (int k = 1; k < n; ++k) sub(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
  return golub_welsch(diag, sub, 2.0);
}

QuadratureGrid::QuadratureGrid(int radial_order, int angular_order)
    : radial_order_(radial_order), angular_order_(angular_order) {
  if (radial_order < 2 || angular_order < 2)
    throw std::invalid_argument("grid orders must be >= 2");
  if (radial_order > 128)
    throw std::invalid_argument(
        "radial order > 128 would overflow the e^{|z|^2} node scale");
  radial_ = gauss_laguerre(radial_order);

  nodes_.reserve(static_cast<size_t>(radial_order) * angular_order);
  weights_.reserve(nodes_.capacity());
  node_t_.reserve(nodes_.capacity());
  const double w_angle = 1.0 / angular_order;
  for (int i = 0; i < radial_order; ++i) {
    const double r = std::sqrt(radial_.nodes[i]);
    for (int a = 0; a < angular_order; ++a) {
      const double phi = 2.0 * std::numbers::pi * a / angular_order;
      nodes_.emplace_back(r * std::cos(phi), r * std::sin(phi));
      weights_.push_back(radial_.weights[i] * w_angle);
      node_t_.push_back(radial_.nodes[i]);
    }
  }
}

double QuadratureGrid::max_radial_node() const { return radial_.nodes.back(); }

bool QuadratureGrid::identity_guaranteed(int m, int n) const {
  if (m < 0 || n < 0) return false;
  return m <= 2 * radial_order_ - 1 && n <= 2 * radial_order_ - 1 &&
         std::abs(m - n) < angular_order_;
}

double QuadratureGrid::identity_deviation(int m, int n) const {
  if (m < 0 || n < 0) throw std::invalid_argument("levels must be nonnegative");
  // <m|z><z|n> e^{+|z|^2} = zbar^m z^n / sqrt(m! n!); accumulate the
  // normalized monomial per node to keep the scale near unity.
  std::complex<double> sum = 0.0;
  const int p = size();
  for (int idx = 0; idx < p; ++idx) {
    const std::complex<double> z = nodes_[idx];
    const std::complex<double> zb = std::conj(z);
    std::complex<double> term = weights_[idx];
    for (int i = 0; i < m; ++i) term *= zb / std::sqrt(i + 1.0);
    for (int i = 0; i < n; ++i) term *= z / std::sqrt(i + 1.0);
    sum += term;
  }
  const double delta = (m == n) ? 1.0 : 0.0;
  return std::abs(sum - delta);
}

double QuadratureGrid::max_identity_deviation(int max_level) const {
  double worst = 0.0;
  for (int m = 0; m <= max_level; ++m)
    for (int n = 0; n <= max_level; ++n)
      worst = std::max(worst, identity_deviation(m, n));
  return worst;
}

}  // namespace cspi::quadrature
