#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cspi/prescription.hpp"
#include "cspi/quadrature.hpp"
#include "cspi/rational.hpp"
#include "cspi/symbols.hpp"

namespace cspi::lattice {

enum class KernelMode { Exact, Naive };

/// Where the Symmetric naive kernel evaluates its symbol.
///
/// EndpointAverage is the average of the Minus and Plus placements and is
/// the rule that realizes the theta(0) = 1/2 prescription: with quadratic
/// symbols it reproduces the Symmetric closed forms of the gaussian
/// module. Midpoint (componentwise average of the two slice fields)
/// converges to a different effective ordering -- already for mu |z|^2 its
/// N -> infinity limit is Tr e^{-beta mu (n + 3/4)} -- and is kept only
/// for comparison.
enum class SymmetricRule {
  EndpointAverage,  // (s(zbar1, z2) + s(zbar2, z2)) / 2
  Midpoint,         // s((zbar1+zbar2)/2, (z1+z2)/2)
};

/// One-step kernel of the time-lattice path integral.
///
/// Exact mode: <z1| e^{-eps H} |z2> from the truncated Hamiltonian; the
/// chained integral is then N-independent up to quadrature error.
///
/// Naive mode: exp(zbar1 z2 - |z1|^2/2 - |z2|^2/2 - eps s(...)) with the
/// symbol placed according to the prescription; this is the
/// continuum-action discretization whose N -> infinity limit is under
/// study. The symbol kind must match the prescription (Wick-Minus,
/// AntiWick-Plus, Weyl-Symmetric) and must be Hermitian.
struct KernelSpec {
  KernelMode mode = KernelMode::Naive;
  double epsilon = 0.0;  // beta / n_slices

  // Naive mode
  symbols::PhaseSymbol symbol;
  Prescription prescription = Prescription::Minus;
  SymmetricRule symmetric_rule = SymmetricRule::EndpointAverage;

  // Exact mode
  Eigen::MatrixXcd hamiltonian;

  static KernelSpec exact(Eigen::MatrixXcd hamiltonian, double epsilon);
  static KernelSpec naive(symbols::PhaseSymbol symbol, Prescription prescription,
                          double epsilon,
                          SymmetricRule rule = SymmetricRule::EndpointAverage);

  KernelSpec with_epsilon(double epsilon) const;
  void validate() const;
};

/// <z1| e^{-eps H} |z2> for a Hermitian truncated Hamiltonian.
std::complex<double> exact_kernel(const Eigen::MatrixXcd& hamiltonian, double epsilon,
                                  std::complex<double> z1, std::complex<double> z2);

std::complex<double> naive_kernel(const KernelSpec& spec, std::complex<double> z1,
                                  std::complex<double> z2);

/// Weight-symmetrized transfer matrix sqrt(w_p) K0(zbar_p, z_q) sqrt(w_q)
/// on the grid, with all e^{-|z|^2/2} factors folded into the weights and
/// one-sided symbol factors split evenly across the step (trace of powers
/// is invariant under both rearrangements). Hermitian for Hermitian input.
Eigen::MatrixXcd transfer_matrix(const KernelSpec& spec,
                                 const quadrature::QuadratureGrid& grid);

struct PartitionResult {
  double value = 0.0;
  int n_slices = 0;
  int radial_order = 0;
  int angular_order = 0;
  int fock_dim = 0;                 // 0 in naive mode
  int window = 0;                   // dimension the chain is resolved on
  double hermiticity_defect = 0.0;  // max |T - T^dag| / max |T|
};

/// Trace of the N-th power of the one-step transfer operator, via its
/// (real) spectrum. spec.epsilon is the step, so total imaginary time is
/// epsilon * n_slices.
///
/// The chain is evaluated on the subspace where the grid actually
/// resolves the identity, i.e. the first min(2 Q_r, Q_a) number states
/// (Loewdin-orthonormalized frame). Outside that window the quadrature
/// misrepresents the overlap kernel by O(1) and raising the raw node
/// matrix to a large power amplifies the junk sector exponentially; the
/// projected chain converges in both N and the grid orders instead.
PartitionResult lattice_partition(const KernelSpec& spec, int n_slices,
                                  const quadrature::QuadratureGrid& grid);

struct RefineOptions {
  double beta = 1.0;
  double rel_tol = 1e-4;
  int start_slices = 8;
  int max_slices = 4096;
};

struct RefinedPartition {
  PartitionResult result;
  double residual = 0.0;         // |Z(N) - Z(N/2)| / |Z(N)|
  double quad_saturation = 0.0;  // relative shift when Q_r is doubled
  bool converged = false;
  std::vector<PartitionResult> history;
};

/// Doubles N until the slice-to-slice change drops below rel_tol (or
/// max_slices is hit), then doubles the radial order once to confirm the
/// quadrature is saturated. Never silent: a non-converged run comes back
/// flagged.
RefinedPartition converged_partition(const KernelSpec& proto,
                                     const quadrature::QuadratureGrid& grid,
                                     const RefineOptions& opts);

struct AnomalyRow {
  std::string symbol_choice;  // "exact-kernel", "weyl-correct", "weyl-linearized"
  Prescription prescription;
  int n_slices;
  double z_lattice;
  double z_exact;
  double ratio;
  double expected_ratio;
};

/// Side-by-side partition functions for the quartic model at mu = 0:
/// the exact-kernel baseline, the naive Symmetric lattice with the true
/// Weyl symbol, and the same lattice with the linearized symbol. The two
/// naive rows differ by the exact constant u/8 in the action, so their
/// ratio is pinned at e^{beta u / 8} for any N and grid.
///
/// The expected-ratio column carries the constant-offset predictions for
/// the N -> infinity limits: 1 for the exact kernel, and for the naive
/// rows the offsets of the averaged one-step ordering, whose effective
/// Hamiltonian adds a/2 to a quartic symbol a|z|^4 + ...: e^{-beta u/4}
/// for the true Weyl symbol and e^{-3 beta u/8} for the linearized one.
std::vector<AnomalyRow> anomaly_report(double beta, const Rational& u,
                                       const std::vector<int>& slice_counts,
                                       const quadrature::QuadratureGrid& grid,
                                       int fock_dim = 0);

}  // namespace cspi::lattice
