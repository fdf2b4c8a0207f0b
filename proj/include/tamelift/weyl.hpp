#pragma once

#include <map>
#include <vector>

#include "tamelift/poly.hpp"

namespace tamelift {

/// Element of the Weyl algebra on x_1..x_n, y_1..y_n with [y_i, x_j] = r delta_ij,
/// where r (the relation parameter) is hbar for the deformed family or a ring
/// constant such as 1 for the classical algebra.
///
/// Stored in normal order: the term with exponent vector (alpha, beta) of
/// length 2n denotes c x^alpha y^beta with every x to the left of every y.
template <class C>
class WeylElt {
 public:
  using coeff_type = C;
  using traits = coeff_traits<C>;
  using ring_type = typename traits::ring_type;
  using term_map = std::map<Monomial, C, LexDescending>;

  WeylElt() = default;
  WeylElt(std::size_t n, const ring_type& ring, const C& relation)
      : n_(n), ring_(ring), rel_(traits::coerce(ring, relation)) {}

  static WeylElt constant(std::size_t n, const ring_type& ring, const C& relation, const C& c) {
    WeylElt u(n, ring, relation);
    u.add_term(Monomial(2 * n), c);
    return u;
  }
  /// Generator i in 0..2n-1: x_{i+1} for i < n, y_{i-n+1} otherwise.
  static WeylElt generator(std::size_t n, const ring_type& ring, const C& relation, std::size_t i) {
    if (i >= 2 * n) throw Error(ErrorCode::IndexOutOfRange, "Weyl generator index out of range");
    WeylElt u(n, ring, relation);
    u.add_term(Monomial::variable(2 * n, i), traits::one(ring));
    return u;
  }
  /// Reads a commutative polynomial in 2n variables as a normal-ordered symbol.
  static WeylElt from_symbol(const Poly<C>& f, const C& relation) {
    if (f.n_vars() % 2 != 0) throw Error(ErrorCode::ArityMismatch, "symbol needs 2n variables");
    WeylElt u(f.n_vars() / 2, f.ring(), relation);
    for (const auto& [m, c] : f.terms()) u.add_term(m, c);
    return u;
  }

  std::size_t n() const noexcept { return n_; }
  const ring_type& ring() const noexcept { return ring_; }
  const C& relation() const noexcept { return rel_; }
  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// The same element with every other property (n, ring, relation) of `like`.
  WeylElt zero_like() const { return WeylElt(n_, ring_, rel_); }
  WeylElt one_like() const { return constant(n_, ring_, rel_, traits::one(ring_)); }

  C coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? traits::zero(ring_) : it->second;
  }

  void add_term(const Monomial& m, const C& c) {
    if (m.size() != 2 * n_) throw Error(ErrorCode::ArityMismatch, "Weyl monomial arity mismatch");
    if (traits::is_zero(c)) return;
    const C cc = traits::coerce(ring_, c);
    auto [it, inserted] = terms_.try_emplace(m, cc);
    if (!inserted) {
      it->second += cc;
      if (traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// The commutative polynomial with the same normal-ordered coefficients.
  Poly<C> symbol() const {
    Poly<C> f(2 * n_, ring_);
    for (const auto& [m, c] : terms_) f.add_term(m, c);
    return f;
  }

  void check_compatible(const WeylElt& o) const {
    if (n_ != o.n_) throw Error(ErrorCode::ArityMismatch, "Weyl elements over different n");
    if (!(ring_ == o.ring_)) throw Error(ErrorCode::RingMismatch, "Weyl elements over different rings");
    if (!(rel_ == o.rel_)) {
      throw Error(ErrorCode::RingMismatch, "Weyl elements with different relation parameters");
    }
  }

  WeylElt& operator+=(const WeylElt& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  WeylElt& operator-=(const WeylElt& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  WeylElt& operator*=(const C& s) {
    term_map out;
    for (const auto& [m, c] : terms_) {
      C v = c * s;
      if (!traits::is_zero(v)) out.emplace(m, std::move(v));
    }
    terms_ = std::move(out);
    return *this;
  }
  friend WeylElt operator+(WeylElt a, const WeylElt& b) { return a += b; }
  friend WeylElt operator-(WeylElt a, const WeylElt& b) { return a -= b; }
  friend WeylElt operator*(WeylElt a, const C& s) { return a *= s; }
  friend WeylElt operator*(const C& s, WeylElt a) { return a *= s; }
  friend WeylElt operator*(const WeylElt& a, const WeylElt& b) { return weyl_mul(a, b); }
  WeylElt operator-() const {
    WeylElt r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  WeylElt& operator*=(const WeylElt& o) { return *this = weyl_mul(*this, o); }

  WeylElt pow(unsigned e) const {
    WeylElt result = one_like();
    WeylElt base = *this;
    while (e > 0) {
      if (e & 1U) result = weyl_mul(result, base);
      e >>= 1U;
      if (e > 0) base = weyl_mul(base, base);
    }
    return result;
  }

  friend bool operator==(const WeylElt& a, const WeylElt& b) {
    return a.n_ == b.n_ && a.ring_ == b.ring_ && a.rel_ == b.rel_ && a.terms_ == b.terms_;
  }

  /// Normal-ordered product. Per index i,
  ///   y_i^b x_i^c = sum_k k! C(b,k) C(c,k) r^k x_i^{c-k} y_i^{b-k},
  /// and distinct indices commute, so the product factorizes over i.
  friend WeylElt weyl_mul(const WeylElt& a, const WeylElt& b) {
    a.check_compatible(b);
    WeylElt out = a.zero_like();
    if (a.is_zero() || b.is_zero()) return out;
    const std::size_t n = a.n_;
    std::vector<C> rel_pow{traits::one(a.ring_)};
    auto rpow = [&](unsigned k) -> const C& {
      while (rel_pow.size() <= k) rel_pow.push_back(rel_pow.back() * a.rel_);
      return rel_pow[k];
    };
    std::vector<unsigned> kmax(n), k(n);
    Monomial m(2 * n);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        const C cab = ca * cb;
        if (traits::is_zero(cab)) continue;
        for (std::size_t i = 0; i < n; ++i) {
          kmax[i] = std::min(ma[n + i], mb[i]);
          k[i] = 0;
        }
        // odometer over 0 <= k_i <= kmax_i
        while (true) {
          unsigned total = 0;
          Integer weight = 1;
          for (std::size_t i = 0; i < n; ++i) {
            total += k[i];
            if (k[i] > 0) {
              weight *= factorial(k[i]) * binomial(ma[n + i], k[i]) * binomial(mb[i], k[i]);
            }
            m[i] = ma[i] + mb[i] - k[i];
            m[n + i] = ma[n + i] + mb[n + i] - k[i];
          }
          const C& r = rpow(total);
          if (!traits::is_zero(r)) {
            out.add_term(m, cab * r * traits::from_integer(a.ring_, weight));
          }
          std::size_t i = 0;
          while (i < n && k[i] == kmax[i]) k[i++] = 0;
          if (i == n) break;
          ++k[i];
        }
      }
    }
    return out;
  }

 private:
  std::size_t n_ = 0;
  ring_type ring_{};
  C rel_{};
  term_map terms_;
};

template <class C>
WeylElt<C> weyl_commutator(const WeylElt<C>& u, const WeylElt<C>& v) {
  return weyl_mul(u, v) - weyl_mul(v, u);
}

/// u commutes with all 2n generators.
template <class C>
bool is_central(const WeylElt<C>& u) {
  for (std::size_t i = 0; i < 2 * u.n(); ++i) {
    const auto g = WeylElt<C>::generator(u.n(), u.ring(), u.relation(), i);
    if (!weyl_commutator(g, u).is_zero()) return false;
  }
  return true;
}

/// Automorphism of the Weyl algebra given by the images of x_1..x_n, y_1..y_n.
template <class C>
class WeylAuto {
 public:
  using elt_type = WeylElt<C>;
  using ring_type = typename elt_type::ring_type;

  WeylAuto() = default;
  explicit WeylAuto(std::vector<elt_type> images) : images_(std::move(images)) {
    if (images_.empty() || images_.size() != 2 * images_.front().n()) {
      throw Error(ErrorCode::ArityMismatch, "Weyl automorphism needs 2n images");
    }
    for (const auto& u : images_) images_.front().check_compatible(u);
  }

  static WeylAuto identity(std::size_t n, const ring_type& ring, const C& relation) {
    std::vector<elt_type> images;
    for (std::size_t i = 0; i < 2 * n; ++i) images.push_back(elt_type::generator(n, ring, relation, i));
    return WeylAuto(std::move(images));
  }

  std::size_t n() const { return images_.front().n(); }
  const ring_type& ring() const { return images_.front().ring(); }
  const C& relation() const { return images_.front().relation(); }
  const std::vector<elt_type>& images() const noexcept { return images_; }
  const elt_type& operator[](std::size_t i) const { return images_.at(i); }

  friend bool operator==(const WeylAuto&, const WeylAuto&) = default;

 private:
  std::vector<elt_type> images_;
};

/// Psi(u): substitutes the images into the normal-ordered monomials of u,
/// x^alpha y^beta -> Psi(x)^alpha Psi(y)^beta.
template <class C>
WeylElt<C> weyl_apply(const WeylAuto<C>& psi, const WeylElt<C>& u) {
  psi[0].check_compatible(u);
  const std::size_t n = u.n();
  std::vector<std::vector<WeylElt<C>>> powers(2 * n);
  auto power = [&](std::size_t i, unsigned e) -> const WeylElt<C>& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(u.one_like());
    while (pw.size() <= e) pw.push_back(weyl_mul(pw.back(), psi[i]));
    return pw[e];
  };
  WeylElt<C> out = u.zero_like();
  for (const auto& [m, c] : u.terms()) {
    WeylElt<C> t = WeylElt<C>::constant(n, u.ring(), u.relation(), c);
    for (std::size_t i = 0; i < 2 * n && !t.is_zero(); ++i) {
      if (m[i] != 0) t = weyl_mul(t, power(i, m[i]));
    }
    out += t;
  }
  return out;
}

/// (Psi o Phi)(g) = Psi(g) with Phi's images substituted; mirrors
/// endo_compose on classical limits.
template <class C>
WeylAuto<C> weyl_compose(const WeylAuto<C>& psi, const WeylAuto<C>& phi) {
  std::vector<WeylElt<C>> out;
  for (const auto& u : psi.images()) out.push_back(weyl_apply(phi, u));
  return WeylAuto<C>(std::move(out));
}

/// [Psi(y_i), Psi(x_j)] = r delta_ij and all other image pairs commute.
template <class C>
bool weyl_auto_check(const WeylAuto<C>& psi) {
  const std::size_t n = psi.n();
  const auto one = psi[0].one_like();
  const auto zero = psi[0].zero_like();
  for (std::size_t i = 0; i < 2 * n; ++i) {
    for (std::size_t j = i + 1; j < 2 * n; ++j) {
      const auto c = weyl_commutator(psi[j], psi[i]);  // [image j, image i]
      const bool pair = j == i + n;                     // (y_i, x_i)
      if (!(c == (pair ? one * psi.relation() : zero))) return false;
    }
  }
  return true;
}

}  // namespace tamelift
