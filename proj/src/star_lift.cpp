#include "tamelift/star_lift.hpp"

namespace tamelift {

namespace {

/// One factor exp(w hbar d_a (x) d_b) of a bidifferential operator.
struct BiOp {
  std::size_t a;
  std::size_t b;
  Rational w;
};

void expand_bidiff(const std::vector<BiOp>& ops, std::size_t at, const QPoly& f, const QPoly& g,
                   unsigned hpow, const Rational& coef, HbarPoly& out) {
  if (at == ops.size()) {
    out.add(hpow, f * g * coef);
    return;
  }
  const BiOp& op = ops[at];
  QPoly ft = f, gt = g;
  Rational c = coef;
  for (unsigned t = 0; !ft.is_zero() && !gt.is_zero(); ++t) {
    expand_bidiff(ops, at + 1, ft, gt, hpow + t, c, out);
    ft = partial_derivative(ft, op.a);
    gt = partial_derivative(gt, op.b);
    c *= op.w / Rational(static_cast<long>(t + 1));
  }
}

std::vector<BiOp> star_ops(std::size_t n, StarOrdering ord) {
  std::vector<BiOp> ops;
  for (std::size_t i = 0; i < n; ++i) {
    if (ord == StarOrdering::Normal) {
      ops.push_back({n + i, i, Rational(1)});
    } else {
      ops.push_back({n + i, i, Rational(Integer(1), Integer(2))});
      ops.push_back({i, n + i, Rational(Integer(-1), Integer(2))});
    }
  }
  return ops;
}

std::size_t half_dim(std::size_t n_vars) {
  if (n_vars % 2 != 0) throw Error(ErrorCode::ArityMismatch, "needs 2n variables");
  return n_vars / 2;
}

/// Linear part in Sp(2n) or transvection by a polynomial in the target's
/// conjugate only; the structural test needs no characteristic-0 bracket.
template <class C>
void require_liftable(const ElementaryAuto<C>& e) {
  const std::size_t n = half_dim(e.n_vars());
  const std::size_t dim = 2 * n;
  const auto& ring = e.ring();
  if (e.is_linear()) {
    const auto& a = e.as_linear().a;
    Matrix<C> j(dim, dim);
    const PoissonStructure P(n);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c)
        j(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = ring_integer<C>(ring, P.b(r, c));
    const Matrix<C> lhs = a.transpose() * j * a;
    for (Eigen::Index r = 0; r < lhs.rows(); ++r)
      for (Eigen::Index c = 0; c < lhs.cols(); ++c)
        if (!(coeff_traits<C>::coerce(ring, lhs(r, c)) == coeff_traits<C>::coerce(ring, j(r, c)))) {
          throw Error(ErrorCode::NotSymplectic, "linear factor is not in Sp(2n)");
        }
    return;
  }
  const auto& t = e.as_transvection();
  const std::size_t partner = t.target < n ? t.target + n : t.target - n;
  for (std::size_t i = 0; i < dim; ++i) {
    if (i != partner && !is_free_of(t.f, i)) {
      throw Error(ErrorCode::NotSymplectic, "transvection depends on more than the conjugate variable");
    }
  }
}

/// Shared lifting recipe; `conv` maps a word coefficient into the Weyl
/// coefficient ring.
template <class D, class C, class Conv>
WeylAuto<D> lift_with(const ElementaryAuto<C>& e, const typename coeff_traits<D>::ring_type& ring,
                      const D& rel, Conv conv) {
  require_liftable(e);
  const std::size_t n = half_dim(e.n_vars());
  auto gens = WeylAuto<D>::identity(n, ring, rel).images();
  if (e.is_linear()) {
    const auto& a = e.as_linear().a;
    std::vector<WeylElt<D>> images;
    for (std::size_t j = 0; j < 2 * n; ++j) {
      WeylElt<D> u(n, ring, rel);
      for (std::size_t i = 0; i < 2 * n; ++i) {
        const C& c = a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        if (!coeff_traits<C>::is_zero(c)) u += gens[i] * conv(c);
      }
      images.push_back(std::move(u));
    }
    return WeylAuto<D>(std::move(images));
  }
  const auto& t = e.as_transvection();
  // f depends on a single generator, so its normal-order symbol is the element.
  gens[t.target] += WeylElt<D>::from_symbol(map_coefficients<D>(t.f, ring, conv), rel);
  return WeylAuto<D>(std::move(gens));
}

template <class D, class C, class LiftOne>
WeylAuto<D> lift_word(const TameWord<C>& w, const typename coeff_traits<D>::ring_type& ring,
                      const D& rel, LiftOne lift_one) {
  WeylAuto<D> acc = WeylAuto<D>::identity(half_dim(w.n_vars()), ring, rel);
  for (const auto& e : w.factors()) acc = weyl_compose(acc, lift_one(e));
  return acc;
}

}  // namespace

HbarPoly symbol(const HbarWeyl& u) {
  HbarPoly r(2 * u.n());
  for (const auto& [m, c] : u.terms()) {
    for (int k = 0; k <= c.max_power(); ++k) {
      const Rational v = c.coefficient(k);
      if (!v.is_zero()) r.add(static_cast<unsigned>(k), QPoly::term(m, v));
    }
  }
  return r;
}

HbarWeyl from_symbol(const HbarPoly& f, const HbarRing<Rational>& ring) {
  const std::size_t n = half_dim(f.n_vars());
  HbarWeyl u(n, ring, QHbar::power(ring, 1));
  for (const auto& [k, g] : f.coeffs()) {
    for (const auto& [m, c] : g.terms()) {
      QHbar s(ring);
      s.add(static_cast<int>(k), c);
      u.add_term(m, s);
    }
  }
  return u;
}

HbarPoly star(const HbarPoly& f, const HbarPoly& g, StarOrdering ord) {
  f.check(g);
  const auto ops = star_ops(half_dim(f.n_vars()), ord);
  HbarPoly out(f.n_vars());
  for (const auto& [i, fi] : f.coeffs())
    for (const auto& [j, gj] : g.coeffs()) expand_bidiff(ops, 0, fi, gj, i + j, Rational(1), out);
  return out;
}

HbarPoly ordering_transform(const HbarPoly& f, OrderingDirection dir) {
  const std::size_t n = half_dim(f.n_vars());
  const Rational w(Integer(dir == OrderingDirection::MoyalToNormal ? 1 : -1), Integer(2));
  HbarPoly out(f.n_vars());
  for (const auto& [k, g] : f.coeffs()) {
    // exp(w hbar sum_i d_{x_i} d_{p_i}) factorizes over i
    std::map<unsigned, QPoly> layer{{k, g}};
    for (std::size_t i = 0; i < n; ++i) {
      std::map<unsigned, QPoly> next;
      for (const auto& [h, q] : layer) {
        QPoly qt = q;
        Rational c(1);
        for (unsigned t = 0; !qt.is_zero(); ++t) {
          auto [it, inserted] = next.try_emplace(h + t, qt * c);
          if (!inserted) it->second += qt * c;
          qt = partial_derivative(partial_derivative(qt, i), n + i);
          c *= w / Rational(static_cast<long>(t + 1));
        }
      }
      layer = std::move(next);
    }
    for (const auto& [h, q] : layer) out.add(h, q);
  }
  return out;
}

HbarWeylAuto lift_elementary(const QElementary& e) {
  const auto ring = hbar_ring();
  return lift_with<QHbar>(e, ring, QHbar::power(ring, 1),
                          [&](const Rational& c) { return QHbar(ring, c); });
}

HbarWeylAuto lift_tame(const QTameWord& w) {
  const auto ring = hbar_ring();
  return lift_word<QHbar>(w, ring, QHbar::power(ring, 1),
                          [](const QElementary& e) { return lift_elementary(e); });
}

FpWeylAuto lift_elementary(const ElementaryAuto<ModInt>& e) {
  const auto& ring = e.ring();
  return lift_with<ModInt>(e, ring, ModInt(1, ring.modulus), [](const ModInt& c) { return c; });
}

FpWeylAuto lift_tame(const TameWord<ModInt>& w) {
  const auto& ring = w.ring();
  return lift_word<ModInt>(w, ring, ModInt(1, ring.modulus),
                           [](const ElementaryAuto<ModInt>& e) { return lift_elementary(e); });
}

QEndo classical_limit(const HbarWeylAuto& psi) {
  std::vector<QPoly> images;
  for (std::size_t l = 0; l < psi.images().size(); ++l) images.push_back(hbar_coefficient(psi, l, 0));
  return QEndo(std::move(images));
}

QPoly hbar_coefficient(const HbarWeylAuto& psi, std::size_t l, unsigned k) {
  if (l >= psi.images().size()) throw Error(ErrorCode::IndexOutOfRange, "image index out of range");
  return symbol(psi[l]).coefficient(k);
}

HbarPoly transported_star(const QTameWord& w, const HbarPoly& f, const HbarPoly& g, StarOrdering ord) {
  if (ord == StarOrdering::Moyal) {
    const auto to_n = OrderingDirection::MoyalToNormal;
    return ordering_transform(
        transported_star(w, ordering_transform(f, to_n), ordering_transform(g, to_n)),
        OrderingDirection::NormalToMoyal);
  }
  const HbarWeylAuto psi = lift_tame(w);
  const HbarWeylAuto psi_inv = lift_tame(tame_invert(w));
  const HbarWeyl prod = weyl_mul(weyl_apply(psi, from_symbol(f)), weyl_apply(psi, from_symbol(g)));
  return symbol(weyl_apply(psi_inv, prod));
}

}  // namespace tamelift
