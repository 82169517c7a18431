#include "cspi/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cspi/rational.hpp"
#include "cspi/prescription.hpp"

namespace cspi {

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  };
  size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto read_digits = [&]() -> boost::multiprecision::cpp_int {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail();
    return boost::multiprecision::cpp_int(std::string(text.substr(start, pos - start)));
  };
  boost::multiprecision::cpp_int integer = read_digits();
  Rational value(integer);
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    size_t start = pos;
    boost::multiprecision::cpp_int frac = read_digits();
    boost::multiprecision::cpp_int scale = 1;
    for (size_t i = start; i < pos; ++i) scale *= 10;
    value += Rational(frac, scale);
  } else if (pos < text.size() && text[pos] == '/') {
    ++pos;
    boost::multiprecision::cpp_int den = read_digits();
    if (den == 0) fail();
    value = Rational(integer, den);
  }
  skip_space();
  if (pos != text.size()) fail();
  return negative ? Rational(-value) : value;
}

double theta_zero(Prescription p) {
  switch (p) {
    case Prescription::Minus: return 0.0;
    case Prescription::Plus: return 1.0;
    case Prescription::Symmetric: return 0.5;
  }
  throw std::logic_error("unreachable");
}

std::string_view name(Prescription p) {
  switch (p) {
    case Prescription::Minus: return "minus";
    case Prescription::Plus: return "plus";
    case Prescription::Symmetric: return "symmetric";
  }
  throw std::logic_error("unreachable");
}

Prescription parse_prescription(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "minus" || lower == "covariant" || lower == "wick") return Prescription::Minus;
  if (lower == "plus" || lower == "contravariant" || lower == "antiwick")
    return Prescription::Plus;
  if (lower == "symmetric" || lower == "weyl") return Prescription::Symmetric;
  throw std::invalid_argument("unknown prescription: '" + std::string(text) + "'");
}

}  // namespace cspi

namespace cspi::fock {

namespace {

void require_dim(int dim, int min_dim) {
  if (dim < min_dim)
    throw std::invalid_argument("Fock truncation dimension must be >= " +
                                std::to_string(min_dim) + ", got " + std::to_string(dim));
}

}  // namespace

Eigen::MatrixXcd annihilator(int dim) {
  require_dim(dim, 2);
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) b(n - 1, n) = std::sqrt(static_cast<double>(n));
  return b;
}

Eigen::MatrixXcd creator(int dim) { return annihilator(dim).adjoint(); }

Eigen::MatrixXcd number_op(int dim) {
  require_dim(dim, 2);
  Eigen::MatrixXcd n = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
  return n;
}

Eigen::MatrixXcd bose_hubbard(double u, double mu, int dim) {
  require_dim(dim, 2);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 0; n < dim; ++n)
    h(n, n) = 0.5 * u * static_cast<double>(n) * static_cast<double>(n - 1) - mu * n;
  return h;
}

Partition exact_partition(const Eigen::MatrixXcd& hamiltonian, double beta) {
  if (hamiltonian.rows() != hamiltonian.cols() || hamiltonian.rows() < 1)
    throw std::invalid_argument("Hamiltonian must be a nonempty square matrix");
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");

  const int dim = static_cast<int>(hamiltonian.rows());
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (i != j && hamiltonian(i, j) != 0.0)
        throw std::invalid_argument(
            "exact_partition supports number-diagonal Hamiltonians only; "
            "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is nonzero");
    }
    if (hamiltonian(i, i).imag() != 0.0)
      throw std::invalid_argument("Hamiltonian diagonal must be real");
  }

  // log(DBL_MAX) ~ 709.78; beyond that a single term overflows.
  constexpr double kMaxExponent = 709.0;
  std::vector<double> terms(dim);
  for (int n = 0; n < dim; ++n) {
    const double exponent = -beta * hamiltonian(n, n).real();
    if (exponent > kMaxExponent)
      throw std::domain_error(
          "partition term exp(-beta E_n) overflows at n = " + std::to_string(n) +
          "; spectrum unbounded below for this truncation");
    terms[n] = std::exp(exponent);
  }
  const double last_term = terms.back();

  // Terms decay superexponentially for the spectra of interest; summing
  // them largest-first keeps the accumulation order deterministic.
  std::sort(terms.begin(), terms.end(), std::greater<>());
  double sum = 0.0, comp = 0.0;
  for (double t : terms) {
    const double y = t - comp;
    const double s = sum + y;
    comp = (s - sum) - y;
    sum = s;
  }
  return {sum, last_term};
}

Coherent coherent_vector(Complex z, int dim) {
  require_dim(dim, 1);
  const double t = std::norm(z);
  Eigen::VectorXcd amps(dim);
  Complex a = std::exp(Complex(-0.5 * t, 0.0));
  amps(0) = a;
  for (int n = 1; n < dim; ++n) {
    a *= z / std::sqrt(static_cast<double>(n));
    amps(n) = a;
  }

  // Poisson tail sum_{n >= dim} e^{-t} t^n / n!, bounded by a geometric
  // majorant once t < dim + 1.
  double tail = 1.0;
  const double log_term = -t + dim * std::log(std::max(t, 1e-300)) - std::lgamma(dim + 1.0);
  if (t < dim + 1) {
    const double r = t / (dim + 1.0);
    tail = std::exp(log_term) / (1.0 - r);
  } else if (t == 0.0) {
    tail = 0.0;
  }
  if (t == 0.0) tail = 0.0;
  return {z, std::move(amps), tail};
}

int default_truncation(double max_abs_z_squared) {
  const double l = std::max(0.0, max_abs_z_squared);
  return static_cast<int>(std::ceil(l + 10.0 * std::sqrt(l) + 20.0));
}

}  // namespace cspi::fock
