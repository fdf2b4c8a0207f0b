#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tamelift/poly.hpp"

namespace tamelift {

using VarNames = std::vector<std::string>;

/// x1..xn, p1..pn for an even count, v1..vN otherwise.
VarNames default_var_names(std::size_t n_vars);
/// X1..Xn, Y1..Yn: generators of the Weyl algebra, or central variables in char p.
VarNames weyl_var_names(std::size_t n);

std::string monomial_str(const Monomial& m, const VarNames& names);

/// Canonical text form: terms in descending lex order, coefficients in lowest
/// terms, unit coefficients omitted, e.g. "3/2*x1^2*p1 - x2".
template <class C>
std::string to_string(const Poly<C>& f, const VarNames& names) {
  if (names.size() != f.n_vars()) throw Error(ErrorCode::ArityMismatch, "name count mismatch");
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    std::string coeff = coeff_traits<C>::to_string(c);
    bool negative = false;
    if (!coeff.empty() && coeff.front() == '-') {
      negative = true;
      coeff.erase(0, 1);
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.is_one()) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += monomial_str(m, names);
    }
  }
  return out;
}

template <class C>
std::string to_string(const Poly<C>& f) {
  return to_string(f, default_var_names(f.n_vars()));
}

/// Parses the polynomial DSL: named variables, integer or "a/b" literals,
/// + - * ^ and parentheses. Also accepts v1..vN for any arity.
QPoly parse_poly(std::string_view text, const VarNames& names);
inline QPoly parse_poly(std::string_view text, std::size_t n_vars) {
  return parse_poly(text, default_var_names(n_vars));
}

}  // namespace tamelift
