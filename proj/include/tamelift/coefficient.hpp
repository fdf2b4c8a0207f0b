#pragma once

#include <cstdint>
#include <string>

#include "tamelift/modint.hpp"
#include "tamelift/rational.hpp"

namespace tamelift {

/// Ring descriptor for Q.
struct RationalField {
  friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// Ring descriptor for Z/m (m = p for F_p, m = p^2 for the lifts used by the
/// induced bracket).
struct ModRing {
  std::uint64_t modulus = 0;
  friend bool operator==(const ModRing&, const ModRing&) = default;
};

/// Uniform access to coefficient rings. Every scalar type used as a polynomial
/// coefficient specializes this.
template <class C>
struct coeff_traits;

template <>
struct coeff_traits<Rational> {
  using ring_type = RationalField;
  static Rational zero(const ring_type&) { return Rational(0); }
  static Rational one(const ring_type&) { return Rational(1); }
  static Rational from_integer(const ring_type&, const Integer& v) { return Rational(v); }
  static Rational from_rational(const ring_type&, const Rational& v) { return v; }
  static bool is_zero(const Rational& c) { return c.is_zero(); }
  static std::string to_string(const Rational& c) { return c.str(); }
  static std::uint64_t characteristic(const ring_type&) { return 0; }
  static void check(const ring_type&, const Rational&) {}
  static Rational coerce(const ring_type&, const Rational& c) { return c; }
};

template <>
struct coeff_traits<ModInt> {
  using ring_type = ModRing;
  static ModInt zero(const ring_type& r) { return ModInt(0, r.modulus); }
  static ModInt one(const ring_type& r) { return ModInt(1, r.modulus); }
  static ModInt from_integer(const ring_type& r, const Integer& v) {
    return ModInt::from_integer(v, r.modulus);
  }
  static ModInt from_rational(const ring_type& r, const Rational& v) {
    return ModInt::from_rational(v, r.modulus);
  }
  static bool is_zero(const ModInt& c) { return c.is_zero(); }
  static std::string to_string(const ModInt& c) { return c.str(); }
  /// The modulus; for Z/p^2 this is p^2 (not a field characteristic).
  static std::uint64_t characteristic(const ring_type& r) { return r.modulus; }
  static void check(const ring_type& r, const ModInt& c) {
    if (c.is_typed() && c.modulus() != r.modulus) {
      throw Error(ErrorCode::RingMismatch, "coefficient modulus " +
                                               std::to_string(c.modulus()) + " vs ring " +
                                               std::to_string(r.modulus));
    }
  }
  /// Attaches the ring's modulus to an untyped literal.
  static ModInt coerce(const ring_type& r, const ModInt& c) {
    check(r, c);
    return ModInt(c.value(), r.modulus);
  }
};

/// Integer constant of any coefficient ring.
template <class C>
C ring_integer(const typename coeff_traits<C>::ring_type& ring, long v) {
  return coeff_traits<C>::from_integer(ring, Integer(v));
}

}  // namespace tamelift
