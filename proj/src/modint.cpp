#include "tamelift/modint.hpp"

namespace tamelift {

namespace {

std::int64_t mod_reduce(__int128 v, std::uint64_t m) {
  const auto mm = static_cast<__int128>(m);
  __int128 r = v % mm;
  if (r < 0) r += mm;
  return static_cast<std::int64_t>(r);
}

}  // namespace

ModInt::ModInt(std::int64_t value, std::uint64_t modulus) : m_(modulus) {
  if (modulus < 2) throw Error(ErrorCode::InvalidInput, "modulus must be >= 2");
  v_ = mod_reduce(value, modulus);
}

ModInt ModInt::from_integer(const Integer& v, std::uint64_t modulus) {
  if (modulus < 2) throw Error(ErrorCode::InvalidInput, "modulus must be >= 2");
  Integer r = v % Integer(static_cast<unsigned long>(modulus));
  if (r < 0) r += static_cast<unsigned long>(modulus);
  return ModInt(static_cast<std::int64_t>(r.get_ui()), modulus);
}

ModInt ModInt::from_rational(const Rational& r, std::uint64_t modulus) {
  const ModInt den = from_integer(r.denominator(), modulus);
  Integer g;
  const Integer m(static_cast<unsigned long>(modulus));
  const Integer d = r.denominator();
  mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
  if (g != 1) {
    throw Error(ErrorCode::BadPrime, "denominator " + r.denominator().get_str() +
                                         " is not invertible mod " + std::to_string(modulus));
  }
  return from_integer(r.numerator(), modulus) * den.inverse();
}

std::uint64_t ModInt::unify(const ModInt& a, const ModInt& b) {
  if (a.m_ != 0 && b.m_ != 0 && a.m_ != b.m_) {
    throw Error(ErrorCode::RingMismatch, "moduli " + std::to_string(a.m_) + " and " +
                                             std::to_string(b.m_) + " differ");
  }
  return a.m_ != 0 ? a.m_ : b.m_;
}

ModInt ModInt::reduced(std::uint64_t m) const {
  if (m == 0 || m_ == m) return *this;
  return ModInt(v_, m);
}

ModInt& ModInt::operator+=(const ModInt& o) {
  const std::uint64_t m = unify(*this, o);
  if (m == 0) {
    v_ += o.v_;
    return *this;
  }
  *this = ModInt(static_cast<std::int64_t>(mod_reduce(
                     static_cast<__int128>(reduced(m).v_) + o.reduced(m).v_, m)),
                 m);
  return *this;
}

ModInt& ModInt::operator-=(const ModInt& o) { return *this += -o; }

ModInt& ModInt::operator*=(const ModInt& o) {
  const std::uint64_t m = unify(*this, o);
  if (m == 0) {
    v_ *= o.v_;
    return *this;
  }
  *this = ModInt(
      mod_reduce(static_cast<__int128>(reduced(m).v_) * o.reduced(m).v_, m), m);
  return *this;
}

ModInt ModInt::operator-() const {
  ModInt r = *this;
  if (m_ == 0) {
    r.v_ = -v_;
  } else if (v_ != 0) {
    r.v_ = static_cast<std::int64_t>(m_) - v_;
  }
  return r;
}

ModInt ModInt::pow(std::uint64_t e) const {
  ModInt base = *this;
  ModInt result = m_ == 0 ? ModInt(1) : ModInt(1, m_);
  while (e > 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

ModInt ModInt::inverse() const {
  if (m_ == 0) {
    if (v_ == 1 || v_ == -1) return *this;
    throw Error(ErrorCode::InvalidInput, "cannot invert an untyped literal");
  }
  // extended Euclid
  __int128 a = v_, b = static_cast<__int128>(m_), x0 = 1, x1 = 0;
  while (b != 0) {
    const __int128 q = a / b;
    a -= q * b;
    std::swap(a, b);
    x0 -= q * x1;
    std::swap(x0, x1);
  }
  if (a != 1) {
    throw Error(ErrorCode::InvalidInput,
                std::to_string(v_) + " is not a unit mod " + std::to_string(m_));
  }
  return ModInt(mod_reduce(x0, m_), m_);
}

bool operator==(const ModInt& a, const ModInt& b) {
  const std::uint64_t m = ModInt::unify(a, b);
  return a.reduced(m).v_ == b.reduced(m).v_;
}

}  // namespace tamelift
