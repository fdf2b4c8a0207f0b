#include "tamelift/rational.hpp"

#include <cctype>

#include "tamelift/error.hpp"

namespace tamelift {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotSymplectic: return "NotSymplectic";
    case ErrorCode::NotSymplecticLinear: return "NotSymplecticLinear";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::NonDivisible: return "NonDivisible";
    case ErrorCode::PreconditionX: return "PreconditionX";
    case ErrorCode::UnremovableDefect: return "UnremovableDefect";
    case ErrorCode::NonHamiltonian: return "NonHamiltonian";
    case ErrorCode::IsIdentity: return "IsIdentity";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::SamplerExhausted: return "SamplerExhausted";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorCode::InvalidInput, "malformed rational '" + std::string(text) + "'");
  }
  const std::string n(num.front() == '+' ? num.substr(1) : num);
  return Rational(Integer(n), Integer(std::string(den)));
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero");
  Rational r;
  r.q_ = 1 / q_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero");
  q_ /= o.q_;
  return *this;
}

Integer factorial(unsigned k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer falling_factorial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r = 1;
  for (unsigned i = 0; i < k; ++i) r *= (n - i);
  return r;
}

}  // namespace tamelift
