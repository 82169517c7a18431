#include "cspi/lattice.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "cspi/errors.hpp"
#include "cspi/fock.hpp"

namespace cspi::lattice {

namespace {

using Complex = std::complex<double>;

// Flat term list for fast repeated evaluation inside the assembly loops.
struct PolyEval {
  struct Term {
    int j, k;
    double c;
  };
  std::vector<Term> terms;

  explicit PolyEval(const symbols::PhaseSymbol& s) {
    terms.reserve(s.terms().size());
    for (const auto& [key, c] : s.terms())
      terms.push_back({key.first, key.second, to_double(c)});
  }

  Complex operator()(Complex zbar, Complex z) const {
    Complex sum = 0.0;
    for (const auto& t : terms) {
      Complex v = t.c;
      for (int i = 0; i < t.j; ++i) v *= zbar;
      for (int i = 0; i < t.k; ++i) v *= z;
      sum += v;
    }
    return sum;
  }
};

Complex checked_exp(Complex exponent) {
  if (exponent.real() > 709.0)
    throw std::domain_error(
        "one-step kernel overflows: the action is unbounded below on this grid");
  return std::exp(exponent);
}

double pow_int(double x, int n) {
  double result = 1.0, base = x;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) result *= base;
    base *= base;
  }
  return result;
}

void check_hermitian(const Eigen::MatrixXcd& h) {
  const double scale = h.cwiseAbs().maxCoeff();
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * std::max(scale, 1.0))
    throw std::invalid_argument("Hamiltonian must be Hermitian");
}

// Stripped coherent components u_n(z) = z^n / sqrt(n!) for all grid
// nodes; the e^{-|z|^2/2} normalizations live in the grid weights.
Eigen::MatrixXcd coherent_columns(const quadrature::QuadratureGrid& grid, int dim) {
  const auto& nodes = grid.nodes();
  const int p = grid.size();
  Eigen::MatrixXcd u(dim, p);
  for (int q = 0; q < p; ++q) {
    Complex a = 1.0;
    u(0, q) = a;
    for (int n = 1; n < dim; ++n) {
      a *= nodes[q] / std::sqrt(static_cast<double>(n));
      u(n, q) = a;
    }
  }
  return u;
}

// exp(-eps H / 2) for Hermitian H.
Eigen::MatrixXcd half_step(const Eigen::MatrixXcd& h, double epsilon) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("Hamiltonian eigendecomposition failed");
  const Eigen::VectorXd phase =
      (-0.5 * epsilon * es.eigenvalues().array()).exp().matrix();
  return es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
}

// D x D Gram matrix sharing the nonzero spectrum of the exact-mode
// transfer matrix: G = e^{-eps H/2} (U W^2 U^dag) e^{-eps H/2}.
Eigen::MatrixXcd exact_gram(const KernelSpec& spec,
                            const quadrature::QuadratureGrid& grid) {
  const int dim = static_cast<int>(spec.hamiltonian.rows());
  const Eigen::MatrixXcd u = coherent_columns(grid, dim);
  Eigen::VectorXd w =
      Eigen::Map<const Eigen::VectorXd>(grid.node_weights().data(), grid.size());
  const Eigen::MatrixXcd resolution = u * w.asDiagonal() * u.adjoint();
  const Eigen::MatrixXcd e = half_step(spec.hamiltonian, spec.epsilon);
  return e * resolution * e;
}

// Symbol placement split into a pairwise part and a one-sided (column)
// part; the latter is shared evenly between the two adjacent steps so the
// assembled matrix is Hermitian with the trace of powers unchanged.
struct NaivePlacement {
  PolyEval poly;
  Prescription prescription;
  SymmetricRule rule;

  explicit NaivePlacement(const KernelSpec& spec)
      : poly(spec.symbol), prescription(spec.prescription), rule(spec.symmetric_rule) {}

  Complex pair(Complex zbar1, Complex z2) const {
    switch (prescription) {
      case Prescription::Minus: return poly(zbar1, z2);
      case Prescription::Plus: return 0.0;
      case Prescription::Symmetric:
        if (rule == SymmetricRule::Midpoint) {
          const Complex m = 0.5 * (z2 + std::conj(zbar1));
          return poly(std::conj(m), m);
        }
        return 0.5 * poly(zbar1, z2);
    }
    throw std::logic_error("unreachable");
  }

  double one_sided(Complex z) const {
    switch (prescription) {
      case Prescription::Minus: return 0.0;
      case Prescription::Plus: return poly(std::conj(z), z).real();
      case Prescription::Symmetric:
        if (rule == SymmetricRule::Midpoint) return 0.0;
        return 0.5 * poly(std::conj(z), z).real();
    }
    throw std::logic_error("unreachable");
  }
};

Eigen::MatrixXcd naive_transfer(const KernelSpec& spec,
                                const quadrature::QuadratureGrid& grid) {
  const NaivePlacement placement(spec);
  const auto& nodes = grid.nodes();
  const auto& weights = grid.node_weights();
  const int p = grid.size();

  std::vector<double> sqrt_w(p), diag(p);
  for (int q = 0; q < p; ++q) {
    sqrt_w[q] = std::sqrt(weights[q]);
    diag[q] = placement.one_sided(nodes[q]);
  }

  Eigen::MatrixXcd t(p, p);
  for (int r = 0; r < p; ++r) {
    const Complex zbar = std::conj(nodes[r]);
    for (int q = 0; q < p; ++q) {
      const Complex exponent = zbar * nodes[q] -
                               spec.epsilon * placement.pair(zbar, nodes[q]) -
                               0.5 * spec.epsilon * (diag[r] + diag[q]);
      t(r, q) = sqrt_w[r] * sqrt_w[q] * checked_exp(exponent);
    }
  }
  return t;
}

double hermiticity_defect(const Eigen::MatrixXcd& t) {
  const double scale = t.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  return (t - t.adjoint()).cwiseAbs().maxCoeff() / scale;
}

// Number of Fock states on which the grid resolves the identity:
// m, n <= 2 Q_r - 1 radially and |m - n| < Q_a in angle.
int resolution_window(const quadrature::QuadratureGrid& grid) {
  return std::min(2 * grid.radial_order(), grid.angular_order());
}

// Compress the node-basis transfer matrix onto the resolved window:
// B = S^{-1/2} V^dag T V S^{-1/2} with V the frame vectors
// (V)_{p,n} = sqrt(w_p) z_p^n / sqrt(n!) and S = V^dag V (= 1 up to
// roundoff on the window). The unresolved frame sector carries O(1)
// quadrature junk whose spurious eigenvalues exceed 1 and would dominate
// Tr T^N at large N.
Eigen::MatrixXcd project_to_window(const Eigen::MatrixXcd& t,
                                   const quadrature::QuadratureGrid& grid) {
  const int window = resolution_window(grid);
  const Eigen::MatrixXcd u = coherent_columns(grid, window);
  Eigen::VectorXd sqrt_w(grid.size());
  for (int q = 0; q < grid.size(); ++q) sqrt_w(q) = std::sqrt(grid.node_weights()[q]);
  // The transfer operator acts on functions of zbar, so the frame vector
  // of the n-th resolved state samples the conjugated monomial.
  const Eigen::MatrixXcd v = (u * sqrt_w.asDiagonal()).adjoint();

  const Eigen::MatrixXcd overlap = v.adjoint() * v;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(overlap);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("frame overlap eigendecomposition failed");
  if (es.eigenvalues().minCoeff() < 0.5)
    throw std::runtime_error("frame vectors lost rank; grid orders are inconsistent");
  const Eigen::VectorXcd inv_sqrt =
      es.eigenvalues().array().rsqrt().cast<std::complex<double>>();
  const Eigen::MatrixXcd s_inv_sqrt =
      es.eigenvectors() * inv_sqrt.asDiagonal() * es.eigenvectors().adjoint();

  return s_inv_sqrt * (v.adjoint() * t * v) * s_inv_sqrt;
}

PartitionResult spectrum_partition(const Eigen::MatrixXcd& t, int n_slices,
                                   const quadrature::QuadratureGrid& grid,
                                   int fock_dim) {
  PartitionResult out;
  out.n_slices = n_slices;
  out.radial_order = grid.radial_order();
  out.angular_order = grid.angular_order();
  out.fock_dim = fock_dim;
  out.window = static_cast<int>(t.rows());
  out.hermiticity_defect = hermiticity_defect(t);
  if (out.hermiticity_defect > 1e-8)
    throw std::invalid_argument(
        "transfer matrix is not Hermitian; the symbol or Hamiltonian must be");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(t, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("transfer-matrix eigendecomposition failed");

  double sum = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double lambda = es.eigenvalues()(i);
    const double mag = pow_int(std::abs(lambda), n_slices);
    sum += (lambda < 0.0 && (n_slices & 1)) ? -mag : mag;
  }
  out.value = sum;
  return out;
}

}  // namespace

KernelSpec KernelSpec::exact(Eigen::MatrixXcd hamiltonian, double epsilon) {
  KernelSpec spec;
  spec.mode = KernelMode::Exact;
  spec.hamiltonian = std::move(hamiltonian);
  spec.epsilon = epsilon;
  spec.validate();
  return spec;
}

KernelSpec KernelSpec::naive(symbols::PhaseSymbol symbol, Prescription prescription,
                             double epsilon, SymmetricRule rule) {
  KernelSpec spec;
  spec.mode = KernelMode::Naive;
  spec.symbol = std::move(symbol);
  spec.prescription = prescription;
  spec.symmetric_rule = rule;
  spec.epsilon = epsilon;
  spec.validate();
  return spec;
}

KernelSpec KernelSpec::with_epsilon(double epsilon) const {
  KernelSpec spec = *this;
  spec.epsilon = epsilon;
  return spec;
}

void KernelSpec::validate() const {
  if (!(epsilon > 0.0)) throw std::invalid_argument("time step epsilon must be positive");
  if (mode == KernelMode::Exact) {
    if (hamiltonian.rows() < 1 || hamiltonian.rows() != hamiltonian.cols())
      throw std::invalid_argument("exact kernel needs a square Hamiltonian");
    check_hermitian(hamiltonian);
    return;
  }
  const auto kind = symbol.kind();
  const bool consistent =
      (kind == symbols::SymbolKind::Wick && prescription == Prescription::Minus) ||
      (kind == symbols::SymbolKind::AntiWick && prescription == Prescription::Plus) ||
      (kind == symbols::SymbolKind::Weyl && prescription == Prescription::Symmetric);
  if (!consistent)
    throw std::invalid_argument(
        "symbol kind '" + std::string(name(kind)) + "' does not match prescription '" +
        std::string(name(prescription)) +
        "' (wick-minus, antiwick-plus, weyl-symmetric)");
  if (!symbol.is_hermitian())
    throw std::invalid_argument("naive kernel requires a Hermitian symbol");
}

Complex exact_kernel(const Eigen::MatrixXcd& hamiltonian, double epsilon, Complex z1,
                     Complex z2) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  check_hermitian(hamiltonian);
  const int dim = static_cast<int>(hamiltonian.rows());
  const auto c1 = fock::coherent_vector(z1, dim);
  const auto c2 = fock::coherent_vector(z2, dim);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hamiltonian);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("Hamiltonian eigendecomposition failed");
  const Eigen::VectorXd weights =
      (-epsilon * es.eigenvalues().array()).exp().matrix();
  const Eigen::VectorXcd left = es.eigenvectors().adjoint() * c1.amplitudes;
  const Eigen::VectorXcd right = es.eigenvectors().adjoint() * c2.amplitudes;
  return (left.conjugate().array() * weights.array().cast<Complex>() * right.array())
      .sum();
}

Complex naive_kernel(const KernelSpec& spec, Complex z1, Complex z2) {
  spec.validate();
  if (spec.mode != KernelMode::Naive)
    throw std::invalid_argument("naive_kernel requires a naive-mode spec");
  const NaivePlacement placement(spec);
  const Complex zbar1 = std::conj(z1);
  const Complex exponent = zbar1 * z2 - 0.5 * std::norm(z1) - 0.5 * std::norm(z2) -
                           spec.epsilon * placement.pair(zbar1, z2) -
                           spec.epsilon * placement.one_sided(z2);
  return checked_exp(exponent);
}

Eigen::MatrixXcd transfer_matrix(const KernelSpec& spec,
                                 const quadrature::QuadratureGrid& grid) {
  spec.validate();
  if (spec.mode == KernelMode::Naive) return naive_transfer(spec, grid);

  // T = A^dag A with A = e^{-eps H/2} U W; same spectrum as the D x D
  // Gram matrix used by lattice_partition.
  const int dim = static_cast<int>(spec.hamiltonian.rows());
  const Eigen::MatrixXcd u = coherent_columns(grid, dim);
  Eigen::VectorXd sqrt_w(grid.size());
  for (int q = 0; q < grid.size(); ++q) sqrt_w(q) = std::sqrt(grid.node_weights()[q]);
  const Eigen::MatrixXcd a = half_step(spec.hamiltonian, spec.epsilon) *
                             (u * sqrt_w.asDiagonal());
  return a.adjoint() * a;
}

PartitionResult lattice_partition(const KernelSpec& spec, int n_slices,
                                  const quadrature::QuadratureGrid& grid) {
  spec.validate();
  if (n_slices < 1) throw std::invalid_argument("need at least one time slice");
  if (spec.mode == KernelMode::Exact) {
    const Eigen::MatrixXcd gram = exact_gram(spec, grid);
    return spectrum_partition(gram, n_slices, grid,
                              static_cast<int>(spec.hamiltonian.rows()));
  }
  const Eigen::MatrixXcd projected = project_to_window(naive_transfer(spec, grid), grid);
  return spectrum_partition(projected, n_slices, grid, 0);
}

RefinedPartition converged_partition(const KernelSpec& proto,
                                     const quadrature::QuadratureGrid& grid,
                                     const RefineOptions& opts) {
  if (!(opts.beta > 0.0)) throw std::invalid_argument("beta must be positive");
  if (opts.start_slices < 1 || opts.max_slices < opts.start_slices)
    throw std::invalid_argument("invalid slice bounds");

  RefinedPartition out;
  double previous = 0.0;
  bool have_previous = false;
  for (int n = opts.start_slices; n <= opts.max_slices; n *= 2) {
    out.result = lattice_partition(proto.with_epsilon(opts.beta / n), n, grid);
    out.history.push_back(out.result);
    if (have_previous) {
      out.residual = std::abs(out.result.value - previous) /
                     std::max(std::abs(out.result.value), 1e-300);
      if (out.residual < opts.rel_tol) {
        out.converged = true;
        break;
      }
    }
    previous = out.result.value;
    have_previous = true;
  }

  // Quadrature saturation: double the radial order once at the final N.
  const quadrature::QuadratureGrid finer(2 * grid.radial_order(), grid.angular_order());
  const auto check = lattice_partition(
      proto.with_epsilon(opts.beta / out.result.n_slices), out.result.n_slices, finer);
  out.quad_saturation = std::abs(check.value - out.result.value) /
                        std::max(std::abs(out.result.value), 1e-300);
  return out;
}

std::vector<AnomalyRow> anomaly_report(double beta, const Rational& u,
                                       const std::vector<int>& slice_counts,
                                       const quadrature::QuadratureGrid& grid,
                                       int fock_dim) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  if (slice_counts.empty()) throw std::invalid_argument("need at least one slice count");
  const int dim = fock_dim > 0 ? fock_dim : 30;

  const double u_d = to_double(u);
  const Eigen::MatrixXcd h = fock::bose_hubbard(u_d, 0.0, dim);
  const double z_exact = fock::exact_partition(h, beta).value;

  const symbols::PhaseSymbol weyl_correct =
      symbols::weyl_symbol(symbols::bose_hubbard_poly(u, 0));
  const symbols::PhaseSymbol weyl_lin = symbols::linearized_weyl_bh(u);
  const double anomaly_factor = std::exp(beta * u_d / 8.0);

  std::vector<AnomalyRow> rows;
  for (int n : slice_counts) {
    const double eps = beta / n;
    const auto exact = lattice_partition(KernelSpec::exact(h, eps), n, grid);
    const auto correct = lattice_partition(
        KernelSpec::naive(weyl_correct, Prescription::Symmetric, eps), n, grid);
    const auto lin = lattice_partition(
        KernelSpec::naive(weyl_lin, Prescription::Symmetric, eps), n, grid);
    rows.push_back({"exact-kernel", Prescription::Minus, n, exact.value, z_exact,
                    exact.value / z_exact, 1.0});
    rows.push_back({"weyl-correct", Prescription::Symmetric, n, correct.value, z_exact,
                    correct.value / z_exact, anomaly_factor});
    rows.push_back({"weyl-linearized", Prescription::Symmetric, n, lin.value, z_exact,
                    lin.value / z_exact, 1.0});
  }
  return rows;
}

}  // namespace cspi::lattice
