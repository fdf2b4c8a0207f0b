#pragma once

#include <variant>
#include <vector>

#include "tamelift/endo.hpp"
#include "tamelift/matrix.hpp"
#include "tamelift/poisson.hpp"

namespace tamelift {

/// Linear change of generators (x_1..x_N) -> (x_1..x_N) A, i.e. the image of
/// x_j is sum_i x_i A(i, j).
template <class C>
struct LinearFactor {
  Matrix<C> a;
  friend bool operator==(const LinearFactor& l, const LinearFactor& r) {
    return l.a.rows() == r.a.rows() && l.a.cols() == r.a.cols() && l.a == r.a;
  }
};

/// x_target -> x_target + f, with f free of x_target.
template <class C>
struct Transvection {
  std::size_t target = 0;
  Poly<C> f;
  friend bool operator==(const Transvection&, const Transvection&) = default;
};

template <class C>
class ElementaryAuto {
 public:
  using variant_type = std::variant<LinearFactor<C>, Transvection<C>>;
  using ring_type = typename Poly<C>::ring_type;

  /// Throws SingularMatrix when A is not invertible over the ring.
  static ElementaryAuto linear(Matrix<C> a, const ring_type& ring = {}) {
    if (a.rows() != a.cols()) throw Error(ErrorCode::ArityMismatch, "linear factor must be square");
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = coeff_traits<C>::coerce(ring, a(i, j));
    }
    if (!inverse_exact<C>(a)) throw Error(ErrorCode::SingularMatrix, "linear factor is singular");
    const auto n = static_cast<std::size_t>(a.rows());
    return ElementaryAuto(LinearFactor<C>{std::move(a)}, n, ring);
  }

  /// Throws InvalidInput when f involves x_target.
  static ElementaryAuto transvection(std::size_t target, Poly<C> f) {
    if (target >= f.n_vars()) throw Error(ErrorCode::IndexOutOfRange, "transvection target out of range");
    if (!is_free_of(f, target)) {
      throw Error(ErrorCode::InvalidInput, "transvection polynomial involves its target variable");
    }
    const std::size_t n = f.n_vars();
    const auto ring = f.ring();
    return ElementaryAuto(Transvection<C>{target, std::move(f)}, n, ring);
  }

  std::size_t n_vars() const noexcept { return n_; }
  const ring_type& ring() const noexcept { return ring_; }
  const variant_type& data() const noexcept { return v_; }
  bool is_linear() const noexcept { return std::holds_alternative<LinearFactor<C>>(v_); }
  const LinearFactor<C>& as_linear() const { return std::get<LinearFactor<C>>(v_); }
  const Transvection<C>& as_transvection() const { return std::get<Transvection<C>>(v_); }

  Endo<C> evaluate() const {
    if (is_linear()) {
      const auto& a = as_linear().a;
      std::vector<Poly<C>> images;
      for (std::size_t j = 0; j < n_; ++j) {
        Poly<C> g(n_, ring_);
        for (std::size_t i = 0; i < n_; ++i) {
          g.add_term(Monomial::variable(n_, i), a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
        }
        images.push_back(std::move(g));
      }
      return Endo<C>(std::move(images));
    }
    const auto& t = as_transvection();
    auto images = Endo<C>::identity(n_, ring_).images();
    images[t.target] += t.f;
    return Endo<C>(std::move(images));
  }

  ElementaryAuto inverse() const {
    if (is_linear()) {
      auto inv = inverse_exact<C>(as_linear().a);
      if (!inv) throw Error(ErrorCode::SingularMatrix, "linear factor is singular");
      return linear(std::move(*inv), ring_);
    }
    const auto& t = as_transvection();
    return transvection(t.target, -t.f);
  }

  friend bool operator==(const ElementaryAuto& l, const ElementaryAuto& r) {
    return l.n_ == r.n_ && l.ring_ == r.ring_ && l.v_ == r.v_;
  }

 private:
  ElementaryAuto(variant_type v, std::size_t n, const ring_type& ring)
      : v_(std::move(v)), n_(n), ring_(ring) {}

  variant_type v_;
  std::size_t n_ = 0;
  ring_type ring_{};
};

/// Sequence of elementary automorphisms; evaluation composes them in order,
/// evaluate([e1, e2, ...]) = e1 o e2 o ... under substitution composition.
template <class C>
class TameWord {
 public:
  using ring_type = typename Poly<C>::ring_type;

  TameWord() = default;
  TameWord(std::size_t n_vars, const ring_type& ring = {}) : n_(n_vars), ring_(ring) {}
  TameWord(std::size_t n_vars, std::vector<ElementaryAuto<C>> factors, const ring_type& ring = {})
      : n_(n_vars), ring_(ring) {
    for (auto& f : factors) push_back(std::move(f));
  }

  std::size_t n_vars() const noexcept { return n_; }
  const ring_type& ring() const noexcept { return ring_; }
  const std::vector<ElementaryAuto<C>>& factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }
  bool empty() const noexcept { return factors_.empty(); }

  void push_back(ElementaryAuto<C> e) {
    if (e.n_vars() != n_) throw Error(ErrorCode::ArityMismatch, "word factor arity mismatch");
    if (!(e.ring() == ring_)) throw Error(ErrorCode::RingMismatch, "word factor ring mismatch");
    factors_.push_back(std::move(e));
  }
  void append(const TameWord& o) {
    for (const auto& e : o.factors_) push_back(e);
  }
  void pop_back() { factors_.pop_back(); }
  friend TameWord operator+(TameWord a, const TameWord& b) {
    a.append(b);
    return a;
  }

  friend bool operator==(const TameWord&, const TameWord&) = default;

 private:
  std::size_t n_ = 0;
  ring_type ring_{};
  std::vector<ElementaryAuto<C>> factors_;
};

template <class C>
Endo<C> tame_evaluate(const TameWord<C>& w, std::optional<unsigned> max_degree = std::nullopt) {
  Endo<C> acc = Endo<C>::identity(w.n_vars(), w.ring());
  for (const auto& e : w.factors()) acc = endo_compose(acc, e.evaluate(), max_degree);
  return acc;
}

template <class C>
TameWord<C> tame_invert(const TameWord<C>& w) {
  TameWord<C> r(w.n_vars(), w.ring());
  for (auto it = w.factors().rbegin(); it != w.factors().rend(); ++it) r.push_back(it->inverse());
  return r;
}

/// Linear(A): A^T J A = J. Transvection: the full bracket-preservation check.
bool elementary_is_symplectic(const PoissonStructure& P, const ElementaryAuto<Rational>& e);

/// Transvection whose polynomial depends only on the Darboux partner of the
/// target; throws NotSymplectic otherwise. This is the constructor used for
/// symplectic words.
ElementaryAuto<Rational> symplectic_transvection(const PoissonStructure& P, std::size_t target,
                                                 QPoly f);

/// Throws NotSymplectic unless A^T J A = J.
ElementaryAuto<Rational> symplectic_linear(const PoissonStructure& P, QMatrix a);

using QTameWord = TameWord<Rational>;
using QEndo = Endo<Rational>;
using QElementary = ElementaryAuto<Rational>;

/// The Nagata map in variables (x, y, z) = (v1, v2, v3), Delta = x^2 - yz,
/// together with an explicit inverse.
struct NagataPair {
  QEndo map;
  QEndo inverse;
};

/// (x + Delta z, y + 2 Delta x + Delta^2 z, z) and (x - Delta z, y - 2 Delta x + Delta^2 z, z).
NagataPair nagata();
/// The variant with first coordinate x + Delta x.
QEndo nagata_printed();
/// x^2 - yz in three variables.
QPoly nagata_delta();

}  // namespace tamelift
