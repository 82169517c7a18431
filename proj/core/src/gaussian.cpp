#include "cspi/gaussian.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/LU>

#include "cspi/errors.hpp"
#include "cspi/quadrature.hpp"

namespace cspi::gaussian {

GaussianParams::GaussianParams(double beta, double mu, double mu0)
    : beta(beta), mu(mu), mu0(mu0) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  if (!(mu > 0.0) || !(mu0 > 0.0))
    throw std::invalid_argument(
        "chemical potentials must be positive (Bose factor pole at mu = 0)");
}

namespace {

double bose(double beta_mu) { return 1.0 / std::expm1(beta_mu); }

struct KernelCoeffs {
  double diag;  // a
  double sub;   // c, entering as -c on the cyclic subdiagonal
};

KernelCoeffs kernel_coeffs(Prescription prescription, double eps_mu) {
  switch (prescription) {
    case Prescription::Minus: return {1.0, 1.0 - eps_mu};
    case Prescription::Plus: return {1.0 + eps_mu, 1.0};
    case Prescription::Symmetric: return {1.0 + 0.5 * eps_mu, 1.0 - 0.5 * eps_mu};
  }
  throw std::logic_error("unreachable");
}

void check_slices(const GaussianParams& p, int n_slices) {
  if (n_slices < 2) throw std::invalid_argument("need at least 2 time slices");
  if (!(p.beta * p.mu / n_slices < 1.0))
    throw std::invalid_argument("time step too large: beta*mu/N must be < 1");
}

}  // namespace

double green_function(double tau1, double tau2, const GaussianParams& p) {
  if (tau1 < 0.0 || tau1 >= p.beta || tau2 < 0.0 || tau2 >= p.beta)
    throw std::invalid_argument("time arguments must lie in [0, beta)");
  if (tau1 == tau2)
    throw std::invalid_argument(
        "equal-time Green function is prescription-dependent; call green_at_zero");
  const double dt = tau1 - tau2;
  const double theta = dt > 0.0 ? 1.0 : 0.0;
  return (bose(p.beta * p.mu) + theta) * std::exp(-p.mu * dt);
}

double green_at_zero(Prescription prescription, const GaussianParams& p) {
  return bose(p.beta * p.mu) + theta_zero(prescription);
}

double ratio_closed(Prescription prescription, const GaussianParams& p) {
  const double base = -std::expm1(-p.beta * p.mu0) / -std::expm1(-p.beta * p.mu);
  switch (prescription) {
    case Prescription::Minus: return base;
    case Prescription::Plus: return base * std::exp(-p.beta * (p.mu - p.mu0));
    case Prescription::Symmetric:
      return base * std::exp(-0.5 * p.beta * (p.mu - p.mu0));
  }
  throw std::logic_error("unreachable");
}

double ratio_by_integration(Prescription prescription, const GaussianParams& p,
                            int quad_points) {
  if (quad_points < 8) throw std::invalid_argument("need at least 8 quadrature points");

  auto integral = [&](int n) {
    const auto rule = quadrature::gauss_legendre(n);
    const double center = 0.5 * (p.mu + p.mu0);
    const double half = 0.5 * (p.mu - p.mu0);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double mu = center + half * rule.nodes[i];
      const GaussianParams q(p.beta, mu, p.mu0);
      sum += rule.weights[i] * p.beta * green_at_zero(prescription, q);
    }
    return half * sum;
  };

  const double coarse = integral(quad_points);
  const double fine = integral(2 * quad_points);
  if (std::abs(fine - coarse) > 1e-10 * (1.0 + std::abs(fine)))
    throw convergence_error("trace-of-G quadrature did not converge; refinement moved "
                            "the integral by more than 1e-10 relative");
  return std::exp(-fine);
}

LatticeDeterminant lattice_determinant(Prescription prescription,
                                       const GaussianParams& p, int n_slices) {
  check_slices(p, n_slices);
  const double eps_mu = p.beta * p.mu / n_slices;
  const auto [a, c] = kernel_coeffs(prescription, eps_mu);
  const double value = std::pow(a, n_slices) - std::pow(c, n_slices);

  LatticeDeterminant out;
  out.value = value;
  switch (prescription) {
    case Prescription::Minus:
      out.continuum_target = -std::expm1(-p.beta * p.mu);
      out.normalization = 1.0;
      out.normalized_target = out.continuum_target;
      break;
    case Prescription::Plus:
      out.continuum_target = std::expm1(p.beta * p.mu);
      out.normalization = std::pow(a, n_slices);
      out.normalized_target = -std::expm1(-p.beta * p.mu);
      break;
    case Prescription::Symmetric:
      out.continuum_target = std::exp(0.5 * p.beta * p.mu) - std::exp(-0.5 * p.beta * p.mu);
      out.normalization = 1.0;
      out.normalized_target = out.continuum_target;
      break;
  }
  out.normalized = out.value / out.normalization;
  return out;
}

Eigen::MatrixXd lattice_kernel_matrix(Prescription prescription,
                                      const GaussianParams& p, int n_slices) {
  check_slices(p, n_slices);
  const auto [a, c] = kernel_coeffs(prescription, p.beta * p.mu / n_slices);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_slices, n_slices);
  for (int k = 0; k < n_slices; ++k) {
    m(k, k) = a;
    m((k + 1) % n_slices, k) = -c;
  }
  return m;
}

double lattice_determinant_lu(Prescription prescription, const GaussianParams& p,
                              int n_slices) {
  if (n_slices > 4096)
    throw std::invalid_argument("dense LU cross-check is limited to N <= 4096");
  return Eigen::PartialPivLU<Eigen::MatrixXd>(
             lattice_kernel_matrix(prescription, p, n_slices))
      .determinant();
}

}  // namespace cspi::gaussian
