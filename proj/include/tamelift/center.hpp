#pragma once

#include "tamelift/hbar_series.hpp"
#include "tamelift/tame.hpp"
#include "tamelift/weyl.hpp"

namespace tamelift {

using FpWeyl = WeylElt<ModInt>;
using FpWeylAuto = WeylAuto<ModInt>;

bool is_prime(std::uint64_t p);
/// Throws BadPrime unless p is prime.
void require_prime(std::uint64_t p);

/// The classical Weyl algebra over Z/m (relation parameter 1).
inline FpWeyl modular_weyl_generator(std::size_t n, std::uint64_t m, std::size_t i) {
  return FpWeyl::generator(n, ModRing{m}, ModInt(1, m), i);
}

/// Reads a normal-ordered element whose exponents are all multiples of p as a
/// polynomial in the central variables X_i = x_i^p, Y_i = y_i^p.
/// Throws NotCentral otherwise.
FpPoly weyl_to_center(const FpWeyl& u, std::uint64_t p);

/// X^a Y^b -> x^{pa} y^{pb} over Z/m, coefficients lifted by their least
/// non-negative representatives.
FpWeyl center_to_weyl(const FpPoly& f, std::uint64_t p, std::uint64_t m);

/// Poisson bracket on the center of W_n(F_p): lift to Z/p^2, take the
/// commutator, divide by p, reduce. Inputs are polynomials in the central
/// variables; NonDivisible flags a commutator coefficient not divisible by p.
FpPoly induced_poisson_bracket(const FpPoly& a, const FpPoly& b, std::uint64_t p);

/// Same bracket for elements given in W_n(F_p); throws NotCentral when an
/// input does not commute with every generator.
FpPoly induced_poisson_bracket(const FpWeyl& a, const FpWeyl& b);

/// Coefficientwise reduction. BadPrime when a denominator is divisible by p or
/// a linear factor becomes singular.
TameWord<ModInt> reduce_mod_p(const QTameWord& w, std::uint64_t p);

/// Specializes hbar = 1 and reduces every coefficient mod p.
FpWeylAuto reduce_mod_p(const WeylAuto<QHbar>& psi, std::uint64_t p);

/// The map induced on the center F_p[X, Y]: Psi(x_i)^p and Psi(y_i)^p,
/// read in central variables. Throws NotCentral if an image power is not
/// central (Psi was not an automorphism).
Endo<ModInt> restrict_to_center(const FpWeylAuto& psi);

/// Raises every coefficient to the p-th power (the identity on F_p itself).
Endo<ModInt> frobenius_twist(const Endo<ModInt>& phi);

}  // namespace tamelift
