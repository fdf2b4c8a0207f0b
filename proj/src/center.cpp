#include "tamelift/center.hpp"

namespace tamelift {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::BadPrime, std::to_string(p) + " is not prime");
}

FpPoly weyl_to_center(const FpWeyl& u, std::uint64_t p) {
  FpPoly f(2 * u.n(), u.ring());
  for (const auto& [m, c] : u.terms()) {
    Monomial r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] % p != 0) {
        throw Error(ErrorCode::NotCentral, "exponent " + std::to_string(m[i]) +
                                               " is not a multiple of " + std::to_string(p));
      }
      r[i] = static_cast<Monomial::exponent_type>(m[i] / p);
    }
    f.add_term(r, c);
  }
  return f;
}

FpWeyl center_to_weyl(const FpPoly& f, std::uint64_t p, std::uint64_t m) {
  if (f.n_vars() % 2 != 0) throw Error(ErrorCode::ArityMismatch, "center polynomial needs 2n variables");
  FpWeyl u(f.n_vars() / 2, ModRing{m}, ModInt(1, m));
  for (const auto& [mono, c] : f.terms()) {
    Monomial e(mono.size());
    for (std::size_t i = 0; i < mono.size(); ++i) {
      e[i] = static_cast<Monomial::exponent_type>(mono[i] * p);
    }
    u.add_term(e, ModInt(c.value(), m));
  }
  return u;
}

FpPoly induced_poisson_bracket(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  require_prime(p);
  a.check_compatible(b);
  if (!(a.ring() == ModRing{p})) throw Error(ErrorCode::RingMismatch, "center polynomials must be over F_p");
  const std::uint64_t p2 = p * p;
  const FpWeyl c = weyl_commutator(center_to_weyl(a, p, p2), center_to_weyl(b, p, p2));
  FpWeyl divided(c.n(), ModRing{p}, ModInt(1, p));
  for (const auto& [m, v] : c.terms()) {
    const auto rep = static_cast<std::uint64_t>(v.value());
    if (rep % p != 0) {
      throw Error(ErrorCode::NonDivisible, "commutator coefficient " + std::to_string(rep) +
                                               " is not divisible by " + std::to_string(p));
    }
    divided.add_term(m, ModInt(static_cast<std::int64_t>(rep / p), p));
  }
  return weyl_to_center(divided, p);
}

FpPoly induced_poisson_bracket(const FpWeyl& a, const FpWeyl& b) {
  a.check_compatible(b);
  const std::uint64_t p = a.ring().modulus;
  require_prime(p);
  if (!is_central(a) || !is_central(b)) throw Error(ErrorCode::NotCentral, "bracket inputs must be central");
  return induced_poisson_bracket(weyl_to_center(a, p), weyl_to_center(b, p), p);
}

TameWord<ModInt> reduce_mod_p(const QTameWord& w, std::uint64_t p) {
  require_prime(p);
  const ModRing ring{p};
  TameWord<ModInt> out(w.n_vars(), ring);
  auto reduce = [&](const Rational& c) {
    try {
      return ModInt::from_rational(c, p);
    } catch (const Error&) {
      throw Error(ErrorCode::BadPrime, "coefficient " + c.str() + " has denominator divisible by " +
                                           std::to_string(p));
    }
  };
  for (const auto& e : w.factors()) {
    if (e.is_linear()) {
      const auto& a = e.as_linear().a;
      Matrix<ModInt> r(a.rows(), a.cols());
      for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) r(i, j) = reduce(a(i, j));
      try {
        out.push_back(ElementaryAuto<ModInt>::linear(std::move(r), ring));
      } catch (const Error& err) {
        if (err.code() != ErrorCode::SingularMatrix) throw;
        throw Error(ErrorCode::BadPrime, "linear factor is singular mod " + std::to_string(p));
      }
    } else {
      const auto& t = e.as_transvection();
      out.push_back(ElementaryAuto<ModInt>::transvection(
          t.target, map_coefficients<ModInt>(t.f, ring, reduce)));
    }
  }
  return out;
}

FpWeylAuto reduce_mod_p(const WeylAuto<QHbar>& psi, std::uint64_t p) {
  require_prime(p);
  std::vector<FpWeyl> images;
  for (const auto& u : psi.images()) {
    FpWeyl r(u.n(), ModRing{p}, ModInt(1, p));
    for (const auto& [m, c] : u.terms()) {
      const Rational at_one = c.evaluate(Rational(1));
      try {
        r.add_term(m, ModInt::from_rational(at_one, p));
      } catch (const Error&) {
        throw Error(ErrorCode::BadPrime, "coefficient " + at_one.str() +
                                             " has denominator divisible by " + std::to_string(p));
      }
    }
    images.push_back(std::move(r));
  }
  return FpWeylAuto(std::move(images));
}

Endo<ModInt> restrict_to_center(const FpWeylAuto& psi) {
  const std::uint64_t p = psi.ring().modulus;
  require_prime(p);
  std::vector<FpPoly> images;
  for (const auto& u : psi.images()) {
    const FpWeyl up = u.pow(static_cast<unsigned>(p));
    if (!is_central(up)) throw Error(ErrorCode::NotCentral, "p-th power of an image is not central");
    images.push_back(weyl_to_center(up, p));
  }
  return Endo<ModInt>(std::move(images));
}

Endo<ModInt> frobenius_twist(const Endo<ModInt>& phi) {
  const auto ring = phi.ring();
  std::vector<FpPoly> images;
  for (const auto& f : phi.images()) {
    images.push_back(map_coefficients<ModInt>(f, ring, [&](const ModInt& c) { return c.pow(ring.modulus); }));
  }
  return Endo<ModInt>(std::move(images));
}

}  // namespace tamelift
