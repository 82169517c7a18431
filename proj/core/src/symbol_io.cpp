#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

#include "cspi/symbols.hpp"

namespace cspi::symbols {

namespace {

// Terms print highest total degree first.
std::vector<std::pair<MonomialKey, Rational>> sorted_terms(const TermMap& terms) {
  std::vector<std::pair<MonomialKey, Rational>> v(terms.begin(), terms.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second;
    const int db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first > b.first;
  });
  return v;
}

std::string power(const std::string& base, int exponent) {
  if (exponent == 1) return base;
  return base + "^" + std::to_string(exponent);
}

std::string phase_monomial(int j, int k) {
  if (j == 0 && k == 0) return "";
  if (j == k) return "|z|^" + std::to_string(2 * j);
  std::string out;
  if (j > 0) out += power("zbar", j);
  if (k > 0) {
    if (!out.empty()) out += "*";
    out += power("z", k);
  }
  return out;
}

std::string operator_monomial(int j, int k) {
  std::string out;
  if (j > 0) out += power("bd", j);
  if (k > 0) {
    if (!out.empty()) out += "*";
    out += power("b", k);
  }
  return out;
}

std::string render(const TermMap& terms, std::string (*monomial)(int, int)) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : sorted_terms(terms)) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono = monomial(key.first, key.second);
    if (mono.empty()) {
      out += cspi::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += cspi::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace

std::string to_string(const PhaseSymbol& s) { return render(s.terms(), phase_monomial); }

std::string to_string(const NormalPoly& p) { return render(p.terms(), operator_monomial); }

// ------------------------------------------------------------------- parsing

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  NormalPoly parse() {
    NormalPoly result = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("operator expression error at position " +
                                std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  NormalPoly parse_expr() {
    bool negative = false;
    if (consume('-'))
      negative = true;
    else
      consume('+');
    NormalPoly acc = parse_term();
    if (negative) acc = -acc;
    while (true) {
      if (consume('+'))
        acc += parse_term();
      else if (consume('-'))
        acc -= parse_term();
      else
        break;
    }
    return acc;
  }

  NormalPoly parse_term() {
    NormalPoly acc = parse_factor();
    while (true) {
      if (consume('*')) {
        acc = acc * parse_factor();
      } else if (consume('/')) {
        const NormalPoly divisor = parse_factor();
        if (divisor.terms().size() != 1 || divisor.coeff(0, 0) == 0)
          fail("division is only defined by nonzero constants");
        acc *= Rational(1) / divisor.coeff(0, 0);
      } else {
        break;
      }
    }
    return acc;
  }

  NormalPoly parse_factor() {
    NormalPoly base = parse_atom();
    if (consume('^')) {
      skip_space();
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (pos_ == start) fail("expected a nonnegative integer exponent after '^'");
      const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      return base.pow(e);
    }
    return base;
  }

  NormalPoly parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NormalPoly inner = parse_expr();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'n' || c == 'N') {
      ++pos_;
      return NormalPoly::number();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
        ++pos_;
      // A '/' between two integers is a rational literal, but only when it
      // is not the term-level division of a parenthesized factor; the
      // term parser handles the general case, so here we only grab digits.
      return NormalPoly::constant(parse_rational(text_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

NormalPoly parse_number_polynomial(std::string_view text) {
  return PolyParser(text).parse();
}

PhaseSymbol parse_symbol_coeffs(std::string_view text, SymbolKind kind) {
  PhaseSymbol s(kind);
  size_t pos = 0;
  auto next_piece = [&](char sep, bool required) -> std::string_view {
    size_t end = text.find(sep, pos);
    if (end == std::string_view::npos) {
      if (required)
        throw std::invalid_argument("bad coefficient list near position " +
                                    std::to_string(pos) + ": expected '" + sep + "'");
      end = text.size();
    }
    auto piece = text.substr(pos, end - pos);
    pos = end + 1;
    return piece;
  };
  while (pos < text.size()) {
    const auto j_text = next_piece(',', true);
    const auto k_text = next_piece(':', true);
    const auto c_text = next_piece(';', false);
    const Rational j = parse_rational(j_text);
    const Rational k = parse_rational(k_text);
    if (boost::multiprecision::denominator(j) != 1 ||
        boost::multiprecision::denominator(k) != 1 || j < 0 || k < 0)
      throw std::invalid_argument("monomial exponents must be nonnegative integers");
    s.add_term(j.convert_to<int>(), k.convert_to<int>(), parse_rational(c_text));
  }
  return s;
}

}  // namespace cspi::symbols
