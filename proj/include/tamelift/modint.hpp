#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "tamelift/error.hpp"
#include "tamelift/rational.hpp"

namespace tamelift {

/// Element of Z/m with canonical representative in [0, m).
///
/// A value with modulus 0 is an integer literal that has not yet met its ring
/// (Eigen builds zeros and ones as Scalar(0), Scalar(1)); it adopts the modulus
/// of the first typed operand it is combined with. Mixing two different nonzero
/// moduli throws RingMismatch.
class ModInt {
 public:
  ModInt() = default;
  ModInt(int literal) : v_(literal), m_(0) {}  // NOLINT(implicit)
  ModInt(std::int64_t value, std::uint64_t modulus);

  static ModInt from_integer(const Integer& v, std::uint64_t modulus);
  /// Throws BadPrime when the denominator is not a unit mod `modulus`.
  static ModInt from_rational(const Rational& r, std::uint64_t modulus);

  std::uint64_t modulus() const noexcept { return m_; }
  bool is_typed() const noexcept { return m_ != 0; }
  /// Least non-negative representative (or the raw literal when untyped).
  std::int64_t value() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_ == 0; }

  ModInt pow(std::uint64_t e) const;
  /// Multiplicative inverse; throws InvalidInput for non-units.
  ModInt inverse() const;

  std::string str() const { return std::to_string(v_); }

  ModInt& operator+=(const ModInt& o);
  ModInt& operator-=(const ModInt& o);
  ModInt& operator*=(const ModInt& o);
  ModInt& operator/=(const ModInt& o) { return *this *= o.inverse(); }
  ModInt operator-() const;

  friend ModInt operator+(ModInt a, const ModInt& b) { return a += b; }
  friend ModInt operator-(ModInt a, const ModInt& b) { return a -= b; }
  friend ModInt operator*(ModInt a, const ModInt& b) { return a *= b; }
  friend ModInt operator/(ModInt a, const ModInt& b) { return a /= b; }

  friend bool operator==(const ModInt& a, const ModInt& b);
  friend std::ostream& operator<<(std::ostream& os, const ModInt& a) {
    return os << a.str();
  }

 private:
  static std::uint64_t unify(const ModInt& a, const ModInt& b);
  ModInt reduced(std::uint64_t m) const;

  std::int64_t v_ = 0;
  std::uint64_t m_ = 0;
};

inline ModInt abs(const ModInt& a) { return a; }

}  // namespace tamelift
