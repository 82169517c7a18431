#pragma once

#include <Eigen/Dense>

#include "cspi/prescription.hpp"

namespace cspi::gaussian {

/// Parameters of the quadratic action integral and its reference point.
/// Both chemical potentials must be positive so the Bose factor
/// 1/(exp(beta mu) - 1) stays finite; the mu = 0 quartic model is
/// handled by the lattice module, not here.
struct GaussianParams {
  double beta;
  double mu;
  double mu0;

  GaussianParams(double beta, double mu, double mu0);
};

/// G(tau1 - tau2) = [1/(e^{beta mu}-1) + theta(tau1 - tau2)] e^{-mu (tau1-tau2)}
/// for tau1 != tau2 in [0, beta). Equal arguments are ambiguous; use
/// green_at_zero with an explicit prescription.
double green_function(double tau1, double tau2, const GaussianParams& p);

/// 1/(e^{beta mu} - 1) + theta0(prescription).
double green_at_zero(Prescription prescription, const GaussianParams& p);

/// Closed forms of I_mu / I_mu0:
///   Minus     (1 - e^{-beta mu0}) / (1 - e^{-beta mu})
///   Plus      ... * e^{-beta (mu - mu0)}
///   Symmetric ... * e^{-beta (mu - mu0)/2}
double ratio_closed(Prescription prescription, const GaussianParams& p);

/// exp(-int_{mu0}^{mu} beta G(0) dmu') by Gauss-Legendre quadrature,
/// refined once; throws convergence_error if the refinement moves the
/// result by more than 1e-10 relative.
double ratio_by_integration(Prescription prescription, const GaussianParams& p,
                            int quad_points);

struct LatticeDeterminant {
  double value;              // determinant of the N-step periodic kernel
  double continuum_target;   // its N -> infinity limit
  double normalization;      // Plus: (1 + eps mu)^N, otherwise 1
  double normalized;         // value / normalization
  double normalized_target;  // limit of the normalized value
};

/// Determinant of the N x N cyclic first-order difference kernel.
/// Kernels (diagonal a, cyclic subdiagonal -c, so det = a^N - c^N):
///   Minus     a = 1,            c = 1 - eps mu    -> 1 - e^{-beta mu}
///   Plus      a = 1 + eps mu,   c = 1             -> e^{beta mu} - 1
///   Symmetric a = 1 + eps mu/2, c = 1 - eps mu/2  -> e^{beta mu/2} - e^{-beta mu/2}
/// with eps = beta/N. Requires eps mu < 1.
LatticeDeterminant lattice_determinant(Prescription prescription,
                                       const GaussianParams& p, int n_slices);

/// The same determinant from a dense LU factorization of the explicit
/// kernel matrix; cross-validation route, practical for N <= 4096.
double lattice_determinant_lu(Prescription prescription, const GaussianParams& p,
                              int n_slices);

/// The explicit periodic kernel matrix the LU route factorizes.
Eigen::MatrixXd lattice_kernel_matrix(Prescription prescription,
                                      const GaussianParams& p, int n_slices);

}  // namespace cspi::gaussian
