#pragma once

#include <complex>

#include <Eigen/Dense>

namespace cspi::fock {

using Complex = std::complex<double>;

/// Annihilation operator b on a Fock space truncated to `dim` levels:
/// nonzero entries b(n-1, n) = sqrt(n).
Eigen::MatrixXcd annihilator(int dim);

/// b^dag, the conjugate transpose of annihilator(dim).
Eigen::MatrixXcd creator(int dim);

/// Number operator b^dag b; exactly diagonal with entries 0..dim-1.
Eigen::MatrixXcd number_op(int dim);

/// Single-site Bose-Hubbard Hamiltonian (u/2) n(n-1) - mu n, diagonal.
Eigen::MatrixXcd bose_hubbard(double u, double mu, int dim);

struct Partition {
  double value;      // sum over n < dim of exp(-beta E_n)
  double last_term;  // exp(-beta E_{dim-1}), truncation indicator
};

/// Canonical partition sum of a number-diagonal Hamiltonian. This is the
/// oracle every path-integral result is compared against, so it refuses
/// to diagonalize: a non-diagonal matrix is an error, not a fallback.
/// Throws std::domain_error when a term exp(-beta E_n) overflows
/// (spectrum unbounded below at this truncation).
Partition exact_partition(const Eigen::MatrixXcd& hamiltonian, double beta);

struct Coherent {
  Complex label;
  Eigen::VectorXcd amplitudes;  // exp(-|z|^2/2) z^n / sqrt(n!), n < dim
  double tail_bound;            // Poisson bound on the dropped norm^2
};

Coherent coherent_vector(Complex z, int dim);

/// Truncation policy ceil(L + 10 sqrt(L) + 20) for L = max |z|^2, from
/// the Poisson tail of coherent-state occupations.
int default_truncation(double max_abs_z_squared);

}  // namespace cspi::fock
