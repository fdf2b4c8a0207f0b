#pragma once

#include <map>

#include "tamelift/center.hpp"
#include "tamelift/hbar_series.hpp"
#include "tamelift/tame.hpp"
#include "tamelift/weyl.hpp"

namespace tamelift {

using HbarWeyl = WeylElt<QHbar>;
using HbarWeylAuto = WeylAuto<QHbar>;

/// Polynomial in hbar with QPoly coefficients over 2n commuting variables.
class HbarPoly {
 public:
  HbarPoly() = default;
  explicit HbarPoly(std::size_t n_vars) : n_vars_(n_vars) {}
  /// f as an hbar-free element.
  static HbarPoly from_poly(const QPoly& f) {
    HbarPoly r(f.n_vars());
    r.add(0, f);
    return r;
  }

  std::size_t n_vars() const noexcept { return n_vars_; }
  const std::map<unsigned, QPoly>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  int max_power() const { return c_.empty() ? -1 : static_cast<int>(c_.rbegin()->first); }

  QPoly coefficient(unsigned k) const {
    auto it = c_.find(k);
    return it == c_.end() ? QPoly(n_vars_) : it->second;
  }

  void add(unsigned k, const QPoly& f) {
    if (f.n_vars() != n_vars_) throw Error(ErrorCode::ArityMismatch, "hbar polynomial arity mismatch");
    if (f.is_zero()) return;
    auto [it, inserted] = c_.try_emplace(k, f);
    if (!inserted) {
      it->second += f;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  HbarPoly& operator+=(const HbarPoly& o) {
    check(o);
    for (const auto& [k, f] : o.c_) add(k, f);
    return *this;
  }
  HbarPoly& operator-=(const HbarPoly& o) {
    check(o);
    for (const auto& [k, f] : o.c_) add(k, -f);
    return *this;
  }
  HbarPoly& operator*=(const Rational& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& [k, f] : c_) f *= s;
    return *this;
  }
  friend HbarPoly operator+(HbarPoly a, const HbarPoly& b) { return a += b; }
  friend HbarPoly operator-(HbarPoly a, const HbarPoly& b) { return a -= b; }
  friend HbarPoly operator*(HbarPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const HbarPoly&, const HbarPoly&) = default;

  /// Ordinary commutative product (hbar is central).
  friend HbarPoly commutative_product(const HbarPoly& a, const HbarPoly& b) {
    a.check(b);
    HbarPoly r(a.n_vars_);
    for (const auto& [i, f] : a.c_)
      for (const auto& [j, g] : b.c_) r.add(i + j, f * g);
    return r;
  }

  void check(const HbarPoly& o) const {
    if (n_vars_ != o.n_vars_) throw Error(ErrorCode::ArityMismatch, "hbar polynomial arity mismatch");
  }

 private:
  std::size_t n_vars_ = 0;
  std::map<unsigned, QPoly> c_;
};

enum class StarOrdering { Normal, Moyal };

/// Normal-order symbol of a Weyl element (x^a y^b -> x^a p^b, hbar kept).
HbarPoly symbol(const HbarWeyl& u);
/// Inverse of `symbol`; coefficients land in `ring` (untruncated by default).
HbarWeyl from_symbol(const HbarPoly& f, const HbarRing<Rational>& ring = hbar_ring());

/// Terminating star product for the constant bracket.
///   Normal: sum_gamma hbar^|gamma| / gamma! (d_p^gamma f)(d_x^gamma g)
///   Moyal:  exp((hbar/2) sum_i (d_{p_i} (x) d_{x_i} - d_{x_i} (x) d_{p_i}))
HbarPoly star(const HbarPoly& f, const HbarPoly& g, StarOrdering ord);

enum class OrderingDirection { MoyalToNormal, NormalToMoyal };

/// T = exp((hbar/2) sum_i d_{x_i} d_{p_i}) maps Moyal symbols to normal
/// symbols; NormalToMoyal applies T^{-1}.
HbarPoly ordering_transform(const HbarPoly& f, OrderingDirection dir);

/// The Weyl automorphism with the same defining data as e. Throws
/// NotSymplectic unless e is a linear factor in Sp(2n) or a transvection by a
/// polynomial in the target's conjugate only.
HbarWeylAuto lift_elementary(const QElementary& e);
/// lift(e1) o lift(e2) o ...; empty words lift to the identity.
HbarWeylAuto lift_tame(const QTameWord& w);

/// The same construction over Z/m with relation parameter 1.
FpWeylAuto lift_elementary(const ElementaryAuto<ModInt>& e);
FpWeylAuto lift_tame(const TameWord<ModInt>& w);

/// hbar -> 0 part of every image.
QEndo classical_limit(const HbarWeylAuto& psi);

/// Coefficient of hbar^k in image l, as a commutative polynomial.
QPoly hbar_coefficient(const HbarWeylAuto& psi, std::size_t l, unsigned k);

/// Psi^{-1}(Psi(f) * Psi(g)) with Psi = lift_tame(w) acting on normal-order
/// symbols and Psi^{-1} = lift_tame(tame_invert(w)). Moyal inputs are carried
/// through the ordering transform.
HbarPoly transported_star(const QTameWord& w, const HbarPoly& f, const HbarPoly& g,
                          StarOrdering ord = StarOrdering::Normal);

}  // namespace tamelift
