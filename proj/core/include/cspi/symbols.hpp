#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cspi/rational.hpp"

namespace cspi::symbols {

/// Monomial exponents: (j, k) is (b^dag)^j b^k for operators and
/// zbar^j z^k for phase-space functions.
using MonomialKey = std::pair<int, int>;
using TermMap = std::map<MonomialKey, Rational>;

/// Operator polynomial sum_jk c_jk (b^dag)^j b^k in canonical
/// normal-ordered form: keys unique, zero coefficients erased.
/// Multiplication re-normal-orders through [b, b^dag] = 1.
class NormalPoly {
 public:
  NormalPoly() = default;

  static NormalPoly constant(Rational c);
  static NormalPoly annihilation();            // b
  static NormalPoly creation();                // b^dag
  static NormalPoly number();                  // b^dag b
  static NormalPoly monomial(int j, int k, Rational c);

  const TermMap& terms() const { return terms_; }
  Rational coeff(int j, int k) const;
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // max j + k, -1 when zero
  bool is_hermitian() const;

  NormalPoly& add_term(int j, int k, const Rational& c);

  NormalPoly& operator+=(const NormalPoly& rhs);
  NormalPoly& operator-=(const NormalPoly& rhs);
  NormalPoly& operator*=(const Rational& c);
  NormalPoly operator-() const;
  NormalPoly pow(int exponent) const;

  friend NormalPoly operator+(NormalPoly a, const NormalPoly& b) { return a += b; }
  friend NormalPoly operator-(NormalPoly a, const NormalPoly& b) { return a -= b; }
  friend NormalPoly operator*(NormalPoly a, const Rational& c) { return a *= c; }
  friend NormalPoly operator*(const Rational& c, NormalPoly a) { return a *= c; }
  friend NormalPoly operator*(const NormalPoly& a, const NormalPoly& b);
  bool operator==(const NormalPoly&) const = default;

  /// Matrix of the (untruncated) operator restricted to the first `dim`
  /// number states; every entry is the exact matrix element.
  Eigen::MatrixXcd matrix(int dim) const;

 private:
  TermMap terms_;
};

/// (u/2) n(n-1) - mu n as a canonical NormalPoly.
NormalPoly bose_hubbard_poly(const Rational& u, const Rational& mu);

/// Normal-ordered product of a sequence of factors (empty -> 1).
NormalPoly normal_order(std::span<const NormalPoly> factors);

enum class SymbolKind { Wick, AntiWick, Weyl };

std::string_view name(SymbolKind kind);
SymbolKind parse_symbol_kind(std::string_view text);

/// Phase-space polynomial sum_jk s_jk zbar^j z^k tagged with the
/// quantization scheme it is a symbol for.
class PhaseSymbol {
 public:
  PhaseSymbol() = default;
  explicit PhaseSymbol(SymbolKind kind) : kind_(kind) {}

  static PhaseSymbol constant(Rational c, SymbolKind kind);
  static PhaseSymbol monomial(int j, int k, Rational c, SymbolKind kind);

  SymbolKind kind() const { return kind_; }
  PhaseSymbol with_kind(SymbolKind kind) const;

  const TermMap& terms() const { return terms_; }
  Rational coeff(int j, int k) const;
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  bool is_hermitian() const;  // s_jk == s_kj

  PhaseSymbol& add_term(int j, int k, const Rational& c);

  PhaseSymbol& operator+=(const PhaseSymbol& rhs);  // kinds must match
  PhaseSymbol& operator-=(const PhaseSymbol& rhs);
  PhaseSymbol& operator*=(const Rational& c);
  PhaseSymbol operator-() const;

  friend PhaseSymbol operator+(PhaseSymbol a, const PhaseSymbol& b) { return a += b; }
  friend PhaseSymbol operator-(PhaseSymbol a, const PhaseSymbol& b) { return a -= b; }
  friend PhaseSymbol operator*(PhaseSymbol a, const Rational& c) { return a *= c; }
  friend PhaseSymbol operator*(const Rational& c, PhaseSymbol a) { return a *= c; }
  /// Pointwise polynomial product (not a star product).
  friend PhaseSymbol operator*(const PhaseSymbol& a, const PhaseSymbol& b);
  bool operator==(const PhaseSymbol&) const = default;

  std::complex<double> eval(std::complex<double> zbar, std::complex<double> z) const;

 private:
  TermMap terms_;
  SymbolKind kind_ = SymbolKind::Wick;
};

/// exp(alpha * Delta) with Delta = d^2/dzbar dz acting termwise:
/// Delta zbar^j z^k = j k zbar^{j-1} z^{k-1}. Finite sum by nilpotency.
/// The kind tag is passed through unchanged; callers re-tag.
PhaseSymbol apply_exp_delta(const PhaseSymbol& s, const Rational& alpha);

/// Covariant symbol <z|op|z>: coefficientwise (b^dag)^j b^k -> zbar^j z^k.
PhaseSymbol wick_symbol(const NormalPoly& op);

/// Weyl symbol, exp(-Delta/2) of the covariant one.
PhaseSymbol weyl_symbol(const NormalPoly& op);

/// Contravariant symbol: cov = exp(+Delta) contra, so exp(-Delta) of the
/// covariant one. Cross-validated by round trips and by the quadrature
/// realization of op = integral contra(z) |z><z| d^2z/pi.
PhaseSymbol anti_wick_symbol(const NormalPoly& op);

/// Inverse map: transport the symbol to Wick (alpha = 0, +1/2, +1 for
/// Wick/Weyl/AntiWick) and read the coefficients as (b^dag)^j b^k.
NormalPoly to_normal_poly(const PhaseSymbol& s);

Eigen::MatrixXcd operator_from_symbol(const PhaseSymbol& s, int dim);

/// n_W = |z|^2 - 1/2.
PhaseSymbol number_weyl_symbol();

/// (u/2)(n_W n_W - n_W): the square taken on symbols instead of
/// operators. Differs from weyl_symbol(bose_hubbard_poly(u, 0)) by the
/// constant u/8.
PhaseSymbol linearized_weyl_bh(const Rational& u);
PhaseSymbol linearized_weyl_bh();  // u = 1

// --- text I/O (symbol_io.cpp) ---

/// "1/2*|z|^4 - |z|^2 + 1/4"; off-diagonal monomials as zbar^j*z^k.
std::string to_string(const PhaseSymbol& s);

/// "1/2*bd^2*b^2 + ..." with bd = b^dag.
std::string to_string(const NormalPoly& p);

/// Polynomials in `n` with rational coefficients:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*      (division by constants only)
///   factor := atom ['^' uint]
///   atom   := 'n' | rational | decimal | '(' expr ')'
NormalPoly parse_number_polynomial(std::string_view text);

/// Explicit coefficient list "j,k:c; j,k:c", e.g. "2,2:1/2; 0,0:-1".
PhaseSymbol parse_symbol_coeffs(std::string_view text, SymbolKind kind);

}  // namespace cspi::symbols
