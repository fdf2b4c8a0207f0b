#include "tamelift/poly_io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace tamelift {

VarNames default_var_names(std::size_t n_vars) {
  VarNames names;
  if (n_vars % 2 == 0) {
    const std::size_t n = n_vars / 2;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) names.push_back("p" + std::to_string(i));
  } else {
    for (std::size_t i = 1; i <= n_vars; ++i) names.push_back("v" + std::to_string(i));
  }
  return names;
}

VarNames weyl_var_names(std::size_t n) {
  VarNames names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("Y" + std::to_string(i));
  return names;
}

std::string monomial_str(const Monomial& m, const VarNames& names) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names.at(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarNames& names) : text_(text), names_(names) {}

  QPoly parse() {
    skip_ws();
    QPoly f = expr();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "unexpected character");
    return f;
  }

 private:
  std::size_t n() const { return names_.size(); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  std::optional<char> peek() {
    skip_ws();
    if (pos_ >= text_.size()) return std::nullopt;
    return text_[pos_];
  }

  QPoly expr() {
    QPoly acc(n());
    bool negate = false;
    if (peek() == '-') {
      ++pos_;
      negate = true;
    }
    QPoly t = term();
    acc += negate ? -t : t;
    while (true) {
      const auto c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      QPoly rhs = term();
      if (c == '+') acc += rhs; else acc -= rhs;
    }
    return acc;
  }

  QPoly term() {
    QPoly acc = unary();
    while (true) {
      const auto c = peek();
      if (c != '*' && c != '/') break;
      const std::size_t at = pos_;
      ++pos_;
      QPoly rhs = unary();
      if (c == '*') {
        acc *= rhs;
      } else {
        if (!rhs.is_constant() || rhs.is_zero()) {
          throw SyntaxError(at, "division by a non-constant or zero");
        }
        acc *= rhs.constant_term().inverse();
      }
    }
    return acc;
  }

  QPoly unary() {
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    return power();
  }

  QPoly power() {
    QPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw SyntaxError(pos_, "expected exponent");
      const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 100000) throw SyntaxError(start, "exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  QPoly primary() {
    const auto c = peek();
    if (!c) throw SyntaxError(pos_, "unexpected end of input");
    if (*c == '(') {
      ++pos_;
      QPoly inner = expr();
      if (peek() != ')') throw SyntaxError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(*c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return QPoly::constant(n(), {}, Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(*c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return QPoly::variable(n(), i);
      }
      if (name.size() > 1 && name[0] == 'v') {
        const std::string digits = name.substr(1);
        if (std::all_of(digits.begin(), digits.end(),
                        [](char d) { return std::isdigit(static_cast<unsigned char>(d)); })) {
          const unsigned long idx = std::stoul(digits);
          if (idx >= 1 && idx <= n()) return QPoly::variable(n(), idx - 1);
        }
      }
      throw Error(ErrorCode::UnknownVariable,
                  "unknown variable '" + name + "' at offset " + std::to_string(start));
    }
    throw SyntaxError(pos_, std::string("unexpected '") + *c + "'");
  }

  std::string_view text_;
  const VarNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace

QPoly parse_poly(std::string_view text, const VarNames& names) {
  return Parser(text, names).parse();
}

}  // namespace tamelift
