#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tamelift/coefficient.hpp"
#include "tamelift/error.hpp"
#include "tamelift/grading.hpp"
#include "tamelift/monomial.hpp"

namespace tamelift {

/// Sparse multivariate polynomial over the coefficient ring C.
///
/// Terms are kept in descending lexicographic order of exponent vectors and no
/// zero coefficient is ever stored, so structural equality is mathematical
/// equality.
template <class C>
class Poly {
 public:
  using coeff_type = C;
  using traits = coeff_traits<C>;
  using ring_type = typename traits::ring_type;
  using term_map = std::map<Monomial, C, LexDescending>;

  Poly() = default;
  explicit Poly(std::size_t n_vars, ring_type ring = {}) : n_(n_vars), ring_(ring) {}

  static Poly constant(std::size_t n_vars, const ring_type& ring, const C& c) {
    Poly f(n_vars, ring);
    f.add_term(Monomial(n_vars), c);
    return f;
  }
  static Poly one(std::size_t n_vars, const ring_type& ring = {}) {
    return constant(n_vars, ring, traits::one(ring));
  }
  static Poly variable(std::size_t n_vars, std::size_t i, const ring_type& ring = {}) {
    if (i >= n_vars) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
    Poly f(n_vars, ring);
    f.add_term(Monomial::variable(n_vars, i), traits::one(ring));
    return f;
  }
  static Poly term(const Monomial& m, const C& c, const ring_type& ring = {}) {
    Poly f(m.size(), ring);
    f.add_term(m, c);
    return f;
  }

  std::size_t n_vars() const noexcept { return n_; }
  const ring_type& ring() const noexcept { return ring_; }
  const term_map& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }

  C coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? traits::zero(ring_) : it->second;
  }
  C constant_term() const { return coefficient(Monomial(n_)); }

  /// Accumulates c*m into this polynomial.
  void add_term(const Monomial& m, const C& c) {
    if (m.size() != n_) throw Error(ErrorCode::ArityMismatch, "monomial arity mismatch");
    if (traits::is_zero(c)) return;
    const C cc = traits::coerce(ring_, c);
    auto [it, inserted] = terms_.try_emplace(m, cc);
    if (!inserted) {
      it->second += cc;
      if (traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    check_compatible(o);
    merge(o, [](const C& c) { return c; });
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_compatible(o);
    merge(o, [](const C& c) { return -c; });
    return *this;
  }
  /// this += s * o in one ordered pass.
  Poly& add_scaled(const Poly& o, const C& s) {
    check_compatible(o);
    if (!traits::is_zero(s)) merge(o, [&](const C& c) { return c * s; });
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = multiply(*this, o); }
  Poly& operator*=(const C& s) {
    if (traits::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= s;
      it = traits::is_zero(it->second) ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b); }
  friend Poly operator*(Poly a, const C& s) { return a *= s; }
  friend Poly operator*(const C& s, Poly a) { return a *= s; }
  Poly operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.n_ == b.n_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  /// Product with every term of total degree above max_degree dropped.
  static Poly multiply(const Poly& a, const Poly& b,
                       std::optional<unsigned> max_degree = std::nullopt) {
    a.check_compatible(b);
    Poly r(a.n_, a.ring_);
    if (a.is_zero() || b.is_zero()) return r;
    // b's terms by ascending degree, so a capped row stops early
    std::vector<std::pair<unsigned, const typename term_map::value_type*>> bs;
    bs.reserve(b.terms_.size());
    for (const auto& kv : b.terms_) bs.emplace_back(kv.first.total_degree(), &kv);
    if (max_degree) {
      std::stable_sort(bs.begin(), bs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    }
    Monomial m(a.n_);
    for (const auto& [ma, ca] : a.terms_) {
      const unsigned da = ma.total_degree();
      if (max_degree && da > *max_degree) continue;
      for (const auto& [db, kv] : bs) {
        if (max_degree && da + db > *max_degree) break;
        const auto& [mb, cb] = *kv;
        for (std::size_t i = 0; i < a.n_; ++i) m[i] = ma[i] + mb[i];
        if constexpr (std::is_same_v<C, Rational>) {
          r.terms_[m].add_product(ca, cb);
        } else {
          auto [it, inserted] = r.terms_.try_emplace(m, ca * cb);
          if (!inserted) it->second += ca * cb;
        }
      }
    }
    std::erase_if(r.terms_, [](const auto& kv) { return traits::is_zero(kv.second); });
    return r;
  }

  Poly pow(unsigned e) const {
    Poly result = one(n_, ring_);
    Poly base = *this;
    while (e > 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e > 0) base *= base;
    }
    return result;
  }

  void check_compatible(const Poly& o) const {
    if (n_ != o.n_) {
      throw Error(ErrorCode::ArityMismatch, "polynomials over " + std::to_string(n_) +
                                                " and " + std::to_string(o.n_) + " variables");
    }
    if (!(ring_ == o.ring_)) {
      throw Error(ErrorCode::RingMismatch, "polynomials over different coefficient rings");
    }
  }

 private:
  std::size_t n_ = 0;
  ring_type ring_{};
  term_map terms_;

  /// Ordered merge of fn(o's coefficients) into this; both maps share the
  /// term order, so each insertion lands at a known hint.
  template <class Fn>
  void merge(const Poly& o, Fn fn) {
    const auto comp = terms_.key_comp();
    auto it = terms_.begin();
    for (const auto& [m, c] : o.terms_) {
      while (it != terms_.end() && comp(it->first, m)) ++it;
      if (it != terms_.end() && !comp(m, it->first)) {
        it->second += fn(c);
        it = traits::is_zero(it->second) ? terms_.erase(it) : std::next(it);
      } else {
        C v = fn(c);
        if (!traits::is_zero(v)) terms_.emplace_hint(it, m, std::move(v));
      }
    }
  }
};

template <class C>
Degree degree(const Poly<C>& f) {
  if (f.is_zero()) return Degree::minus_infinity();
  unsigned d = 0;
  for (const auto& [m, c] : f.terms()) d = std::max(d, m.total_degree());
  return Degree(static_cast<int>(d));
}

template <class C>
Height height(const Poly<C>& f) {
  if (f.is_zero()) return Height::infinity();
  unsigned h = f.terms().begin()->first.total_degree();
  for (const auto& [m, c] : f.terms()) h = std::min(h, m.total_degree());
  return Height(static_cast<int>(h));
}

/// Sum of the terms of f of total degree exactly k.
template <class C>
Poly<C> homogeneous_component(const Poly<C>& f, unsigned k) {
  Poly<C> r(f.n_vars(), f.ring());
  for (const auto& [m, c] : f.terms()) {
    if (m.total_degree() == k) r.add_term(m, c);
  }
  return r;
}

/// Drops every term of total degree above max_degree.
template <class C>
Poly<C> truncate_degree(const Poly<C>& f, unsigned max_degree) {
  Poly<C> r(f.n_vars(), f.ring());
  for (const auto& [m, c] : f.terms()) {
    if (m.total_degree() <= max_degree) r.add_term(m, c);
  }
  return r;
}

template <class C>
Poly<C> partial_derivative(const Poly<C>& f, std::size_t i) {
  if (i >= f.n_vars()) throw Error(ErrorCode::IndexOutOfRange, "derivative index out of range");
  Poly<C> r(f.n_vars(), f.ring());
  for (const auto& [m, c] : f.terms()) {
    if (m[i] == 0) continue;
    Monomial dm = m;
    dm[i] -= 1;
    r.add_term(dm, c * ring_integer<C>(f.ring(), static_cast<long>(m[i])));
  }
  return r;
}

/// True when no term of f involves variable i.
template <class C>
bool is_free_of(const Poly<C>& f, std::size_t i) {
  for (const auto& [m, c] : f.terms()) {
    if (m[i] != 0) return false;
  }
  return true;
}

/// Applies fn to every coefficient; the result lives in `ring`.
template <class D, class C, class Fn>
Poly<D> map_coefficients(const Poly<C>& f, const typename coeff_traits<D>::ring_type& ring,
                         Fn&& fn) {
  Poly<D> r(f.n_vars(), ring);
  for (const auto& [m, c] : f.terms()) r.add_term(m, fn(c));
  return r;
}

/// f(images[0], ..., images[N-1]); every image must share arity and ring.
/// With max_degree set, all intermediate terms above it are discarded, which is
/// exact for the result's low-degree part whenever the images have no
/// constant term.
template <class C>
Poly<C> substitute(const Poly<C>& f, const std::vector<Poly<C>>& images,
                   std::optional<unsigned> max_degree = std::nullopt) {
  if (images.size() != f.n_vars()) {
    throw Error(ErrorCode::ArityMismatch, "substitution needs one image per variable");
  }
  if (images.empty()) return f;
  const std::size_t m_vars = images.front().n_vars();
  const auto& ring = images.front().ring();
  for (const auto& g : images) {
    if (g.n_vars() != m_vars || !(g.ring() == ring)) {
      throw Error(ErrorCode::ArityMismatch, "substitution images disagree in arity or ring");
    }
  }
  // powers[i][e] = images[i]^e, filled on demand
  std::vector<std::vector<Poly<C>>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const Poly<C>& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(Poly<C>::one(m_vars, ring));
    while (pw.size() <= e) pw.push_back(Poly<C>::multiply(pw.back(), images[i], max_degree));
    return pw[e];
  };
  Poly<C> result(m_vars, ring);
  for (const auto& [m, c] : f.terms()) {
    if (m.total_degree() == 1) {
      std::size_t i = 0;
      while (m[i] == 0) ++i;
      result.add_scaled(max_degree ? truncate_degree(images[i], *max_degree) : images[i], c);
      continue;
    }
    Poly<C> t = Poly<C>::constant(m_vars, ring, c);
    for (std::size_t i = 0; i < m.size() && !t.is_zero(); ++i) {
      if (m[i] != 0) t = Poly<C>::multiply(t, power(i, m[i]), max_degree);
    }
    result += t;
  }
  return result;
}

/// Determinant of the Jacobian matrix [d images[i] / d x_j], expanded along
/// rows with minors memoized by column subset. Uses ring operations only.
template <class C>
Poly<C> jacobian_det(const std::vector<Poly<C>>& images) {
  const std::size_t n = images.size();
  if (n == 0) throw Error(ErrorCode::ArityMismatch, "empty map");
  const auto& ring = images.front().ring();
  for (const auto& g : images) {
    if (g.n_vars() != n) {
      throw Error(ErrorCode::ArityMismatch, "Jacobian needs N images in N variables");
    }
  }
  if (n > 20) throw Error(ErrorCode::ArityMismatch, "too many variables for expansion");
  std::vector<std::vector<Poly<C>>> jac(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) jac[i].push_back(partial_derivative(images[i], j));
  }
  // minor[mask]: determinant of rows (n - popcount(mask))..n-1 restricted to columns in mask
  std::map<unsigned, Poly<C>> minor;
  minor.emplace(0U, Poly<C>::one(n, ring));
  for (unsigned size = 1; size <= n; ++size) {
    const std::size_t row = n - size;
    for (unsigned mask = 1; mask < (1U << n); ++mask) {
      if (static_cast<unsigned>(__builtin_popcount(mask)) != size) continue;
      Poly<C> acc(n, ring);
      int sign = 1;
      for (std::size_t col = 0; col < n; ++col) {
        if (!(mask & (1U << col))) continue;
        if (!jac[row][col].is_zero()) {
          const Poly<C> t = jac[row][col] * minor.at(mask & ~(1U << col));
          if (sign > 0) acc += t; else acc -= t;
        }
        sign = -sign;
      }
      minor.emplace(mask, std::move(acc));
    }
  }
  return minor.at((1U << n) - 1U);
}

using QPoly = Poly<Rational>;
using FpPoly = Poly<ModInt>;

}  // namespace tamelift
