#include "cspi/symbols.hpp"

#include <cmath>
#include <stdexcept>

namespace cspi::symbols {

namespace {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt b = 1;
  for (int i = 0; i < k; ++i) {
    b *= (n - i);
    b /= (i + 1);
  }
  return b;
}

// n (n-1) ... (n-m+1)
BigInt falling(int n, int m) {
  BigInt f = 1;
  for (int i = 0; i < m; ++i) f *= (n - i);
  return f;
}

void check_exponents(int j, int k) {
  if (j < 0 || k < 0) throw std::invalid_argument("monomial exponents must be nonnegative");
}

}  // namespace

// ---------------------------------------------------------------- NormalPoly

NormalPoly NormalPoly::constant(Rational c) {
  NormalPoly p;
  p.add_term(0, 0, c);
  return p;
}

NormalPoly NormalPoly::annihilation() { return monomial(0, 1, 1); }
NormalPoly NormalPoly::creation() { return monomial(1, 0, 1); }
NormalPoly NormalPoly::number() { return monomial(1, 1, 1); }

NormalPoly NormalPoly::monomial(int j, int k, Rational c) {
  check_exponents(j, k);
  NormalPoly p;
  p.add_term(j, k, c);
  return p;
}

Rational NormalPoly::coeff(int j, int k) const {
  auto it = terms_.find({j, k});
  return it == terms_.end() ? Rational(0) : it->second;
}

int NormalPoly::degree() const {
  int deg = -1;
  for (const auto& [key, c] : terms_) deg = std::max(deg, key.first + key.second);
  return deg;
}

bool NormalPoly::is_hermitian() const {
  for (const auto& [key, c] : terms_)
    if (c != coeff(key.second, key.first)) return false;
  return true;
}

NormalPoly& NormalPoly::add_term(int j, int k, const Rational& c) {
  check_exponents(j, k);
  if (c == 0) return *this;
  auto [it, inserted] = terms_.try_emplace({j, k}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

NormalPoly& NormalPoly::operator+=(const NormalPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, c);
  return *this;
}

NormalPoly& NormalPoly::operator-=(const NormalPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, -c);
  return *this;
}

NormalPoly& NormalPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

NormalPoly NormalPoly::operator-() const {
  NormalPoly p = *this;
  for (auto& [key, v] : p.terms_) v = -v;
  return p;
}

// (b^dag)^j b^k (b^dag)^p b^q =
//   sum_m C(k,m) C(p,m) m! (b^dag)^{j+p-m} b^{k+q-m}
NormalPoly operator*(const NormalPoly& a, const NormalPoly& b) {
  NormalPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    const auto [j, k] = ka;
    for (const auto& [kb, cb] : b.terms_) {
      const auto [p, q] = kb;
      const Rational cc = ca * cb;
      const int mmax = std::min(k, p);
      for (int m = 0; m <= mmax; ++m) {
        const Rational contraction(binomial(k, m) * binomial(p, m) * factorial(m));
        out.add_term(j + p - m, k + q - m, cc * contraction);
      }
    }
  }
  return out;
}

NormalPoly NormalPoly::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative operator power");
  NormalPoly result = NormalPoly::constant(1);
  for (int i = 0; i < exponent; ++i) result = result * (*this);
  return result;
}

Eigen::MatrixXcd NormalPoly::matrix(int dim) const {
  if (dim < 1) throw std::invalid_argument("matrix dimension must be positive");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [key, c] : terms_) {
    const auto [j, k] = key;
    const double cd = to_double(c);
    // <m|(b^dag)^j b^k|n> = delta_{m-j, n-k} sqrt(fall(n,k) fall(m,j))
    for (int n = k; n < dim; ++n) {
      const int m = n - k + j;
      if (m >= dim) continue;
      const double amp = std::sqrt(falling(n, k).convert_to<double>() *
                                   falling(m, j).convert_to<double>());
      out(m, n) += cd * amp;
    }
  }
  return out;
}

NormalPoly bose_hubbard_poly(const Rational& u, const Rational& mu) {
  const NormalPoly n = NormalPoly::number();
  NormalPoly h = (n * n - n) * (u / 2);
  h -= mu * n;
  return h;
}

NormalPoly normal_order(std::span<const NormalPoly> factors) {
  NormalPoly result = NormalPoly::constant(1);
  for (const auto& f : factors) result = result * f;
  return result;
}

// --------------------------------------------------------------- PhaseSymbol

std::string_view name(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::Wick: return "wick";
    case SymbolKind::AntiWick: return "antiwick";
    case SymbolKind::Weyl: return "weyl";
  }
  throw std::logic_error("unreachable");
}

SymbolKind parse_symbol_kind(std::string_view text) {
  std::string lower(text);
  for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "wick" || lower == "covariant") return SymbolKind::Wick;
  if (lower == "antiwick" || lower == "anti-wick" || lower == "contravariant")
    return SymbolKind::AntiWick;
  if (lower == "weyl" || lower == "symmetric") return SymbolKind::Weyl;
  throw std::invalid_argument("unknown symbol kind: '" + std::string(text) + "'");
}

PhaseSymbol PhaseSymbol::constant(Rational c, SymbolKind kind) {
  PhaseSymbol s(kind);
  s.add_term(0, 0, c);
  return s;
}

PhaseSymbol PhaseSymbol::monomial(int j, int k, Rational c, SymbolKind kind) {
  check_exponents(j, k);
  PhaseSymbol s(kind);
  s.add_term(j, k, c);
  return s;
}

PhaseSymbol PhaseSymbol::with_kind(SymbolKind kind) const {
  PhaseSymbol s = *this;
  s.kind_ = kind;
  return s;
}

Rational PhaseSymbol::coeff(int j, int k) const {
  auto it = terms_.find({j, k});
  return it == terms_.end() ? Rational(0) : it->second;
}

int PhaseSymbol::degree() const {
  int deg = -1;
  for (const auto& [key, c] : terms_) deg = std::max(deg, key.first + key.second);
  return deg;
}

bool PhaseSymbol::is_hermitian() const {
  for (const auto& [key, c] : terms_)
    if (c != coeff(key.second, key.first)) return false;
  return true;
}

PhaseSymbol& PhaseSymbol::add_term(int j, int k, const Rational& c) {
  check_exponents(j, k);
  if (c == 0) return *this;
  auto [it, inserted] = terms_.try_emplace({j, k}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

namespace {
void check_same_kind(const PhaseSymbol& a, const PhaseSymbol& b) {
  if (a.kind() != b.kind())
    throw std::invalid_argument("cannot combine symbols of different kinds (" +
                                std::string(name(a.kind())) + " vs " +
                                std::string(name(b.kind())) + ")");
}
}  // namespace

PhaseSymbol& PhaseSymbol::operator+=(const PhaseSymbol& rhs) {
  check_same_kind(*this, rhs);
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, c);
  return *this;
}

PhaseSymbol& PhaseSymbol::operator-=(const PhaseSymbol& rhs) {
  check_same_kind(*this, rhs);
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, -c);
  return *this;
}

PhaseSymbol& PhaseSymbol::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

PhaseSymbol PhaseSymbol::operator-() const {
  PhaseSymbol s = *this;
  for (auto& [key, v] : s.terms_) v = -v;
  return s;
}

PhaseSymbol operator*(const PhaseSymbol& a, const PhaseSymbol& b) {
  check_same_kind(a, b);
  PhaseSymbol out(a.kind());
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

std::complex<double> PhaseSymbol::eval(std::complex<double> zbar,
                                       std::complex<double> z) const {
  std::complex<double> sum = 0.0;
  for (const auto& [key, c] : terms_) {
    std::complex<double> term = to_double(c);
    for (int i = 0; i < key.first; ++i) term *= zbar;
    for (int i = 0; i < key.second; ++i) term *= z;
    sum += term;
  }
  return sum;
}

// ---------------------------------------------------------------- transforms

PhaseSymbol apply_exp_delta(const PhaseSymbol& s, const Rational& alpha) {
  PhaseSymbol out(s.kind());
  for (const auto& [key, c] : s.terms()) {
    const auto [j, k] = key;
    Rational factor = 1;  // alpha^m fall(j,m) fall(k,m) / m!
    out.add_term(j, k, c);
    for (int m = 1; m <= std::min(j, k); ++m) {
      factor *= alpha * (j - m + 1) * (k - m + 1);
      factor /= m;
      out.add_term(j - m, k - m, c * factor);
    }
  }
  return out;
}

PhaseSymbol wick_symbol(const NormalPoly& op) {
  PhaseSymbol s(SymbolKind::Wick);
  for (const auto& [key, c] : op.terms()) s.add_term(key.first, key.second, c);
  return s;
}

PhaseSymbol weyl_symbol(const NormalPoly& op) {
  return apply_exp_delta(wick_symbol(op), Rational(-1, 2)).with_kind(SymbolKind::Weyl);
}

PhaseSymbol anti_wick_symbol(const NormalPoly& op) {
  return apply_exp_delta(wick_symbol(op), Rational(-1)).with_kind(SymbolKind::AntiWick);
}

namespace {
Rational alpha_to_wick(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::Wick: return Rational(0);
    case SymbolKind::Weyl: return Rational(1, 2);
    case SymbolKind::AntiWick: return Rational(1);
  }
  throw std::logic_error("unreachable");
}
}  // namespace

NormalPoly to_normal_poly(const PhaseSymbol& s) {
  const PhaseSymbol wick = apply_exp_delta(s, alpha_to_wick(s.kind()));
  NormalPoly p;
  for (const auto& [key, c] : wick.terms()) p.add_term(key.first, key.second, c);
  return p;
}

Eigen::MatrixXcd operator_from_symbol(const PhaseSymbol& s, int dim) {
  return to_normal_poly(s).matrix(dim);
}

PhaseSymbol number_weyl_symbol() { return weyl_symbol(NormalPoly::number()); }

PhaseSymbol linearized_weyl_bh(const Rational& u) {
  const PhaseSymbol nw = number_weyl_symbol();
  return (nw * nw - nw) * (u / 2);
}

PhaseSymbol linearized_weyl_bh() { return linearized_weyl_bh(Rational(1)); }

}  // namespace cspi::symbols
